#include "berge/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "berge/gf.hpp"
#include "berge/rng.hpp"

namespace berge {

ReducedGraph::ReducedGraph(uint32_t uniformity, uint32_t vertex_count,
                           std::vector<ReducedInstance> instances)
    : m_(uniformity), n_(vertex_count), instances_(std::move(instances)) {
    for (const auto& inst : instances_) ++multiplicity_[inst.m_set];
}

uint32_t ReducedGraph::multiplicity(const std::vector<VertexId>& m_set) const {
    auto it = multiplicity_.find(m_set);
    return it == multiplicity_.end() ? 0 : it->second;
}

uint32_t ReducedGraph::max_multiplicity() const {
    uint32_t best = 0;
    for (const auto& [set, count] : multiplicity_) best = std::max(best, count);
    return best;
}

Hypergraph ReducedGraph::as_hypergraph() const {
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(instances_.size());
    for (const auto& inst : instances_) edges.push_back(inst.m_set);
    return Hypergraph(m_, n_, std::move(edges));
}

namespace {

// Visits the m-subsets of a sorted edge in lexicographic order.
template <typename Fn>
void for_each_subset(std::span<const VertexId> edge, uint32_t m, Fn&& fn) {
    uint32_t r = static_cast<uint32_t>(edge.size());
    std::vector<uint32_t> pick(m);
    for (uint32_t i = 0; i < m; ++i) pick[i] = i;
    std::vector<VertexId> subset(m);
    for (;;) {
        for (uint32_t i = 0; i < m; ++i) subset[i] = edge[pick[i]];
        fn(subset);
        // advance the combination
        uint32_t i = m;
        while (i > 0) {
            --i;
            if (pick[i] != i + r - m) {
                ++pick[i];
                for (uint32_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

ReducedGraph reduce(const Hypergraph& h, const ReductionParams& params) {
    uint32_t m = params.m;
    if (m < 2 || m >= h.uniformity()) {
        throw std::invalid_argument("reduction requires 2 <= m < r");
    }

    Rng tie_rng(params.tie_seed);
    std::map<std::vector<VertexId>, uint32_t> counts;
    std::vector<ReducedInstance> instances;
    instances.reserve(h.edge_count());

    std::vector<std::vector<VertexId>> minima;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        uint32_t best = std::numeric_limits<uint32_t>::max();
        minima.clear();
        for_each_subset(h.edge(i), m, [&](const std::vector<VertexId>& subset) {
            auto it = counts.find(subset);
            uint32_t c = it == counts.end() ? 0 : it->second;
            if (c < best) {
                best = c;
                minima.clear();
                minima.push_back(subset);
            } else if (c == best && params.tie_break == TieBreak::seeded_random) {
                minima.push_back(subset);
            }
        });
        // Lexicographic tie-break is the first minimum in subset order; the
        // randomized rule draws uniformly among all minima.
        const std::vector<VertexId>& choice =
            params.tie_break == TieBreak::lexicographic
                ? minima.front()
                : minima[tie_rng.below(minima.size())];
        ++counts[choice];
        instances.push_back(ReducedInstance{choice, i});
    }
    return ReducedGraph(m, h.vertex_count(), std::move(instances));
}

uint64_t multiplicity_bound(uint32_t k, uint32_t t, uint32_t r, uint32_t m) {
    if (k < 2) throw std::invalid_argument("multiplicity_bound requires k >= 2");
    if (t < 1) throw std::invalid_argument("multiplicity_bound requires t >= 1");
    if (m < 2 || m >= r) throw std::invalid_argument("multiplicity_bound requires 2 <= m < r");

    uint64_t total = static_cast<uint64_t>(k) + 1;
    uint64_t base = static_cast<uint64_t>(m) * k * (t - 1);
    for (uint64_t j = 1; j <= k + 1ull; ++j) {
        uint64_t term = binomial(base + j * m - m, r - m);
        if (total > std::numeric_limits<uint64_t>::max() - term) {
            throw std::overflow_error("multiplicity bound exceeds uint64");
        }
        total += term;
    }
    return total;
}

ThetaWitness lift_theta(const ReducedGraph& g, const ThetaWitness& w) {
    Hypergraph view = g.as_hypergraph();
    if (!validate_theta(view, w)) {
        throw std::invalid_argument("witness is not a valid theta in the reduced graph");
    }
    ThetaWitness lifted;
    lifted.x = w.x;
    lifted.y = w.y;
    lifted.paths.reserve(w.paths.size());
    for (const auto& path : w.paths) {
        BergePathWitness up;
        up.core = path.core;
        up.edges.reserve(path.edges.size());
        for (EdgeIndex e : path.edges) up.edges.push_back(g.instances()[e].source_edge);
        lifted.paths.push_back(std::move(up));
    }
    return lifted;
}

}  // namespace berge
