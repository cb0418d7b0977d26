#include "berge/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge {

namespace {

uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | v;
}

const std::vector<EdgeIndex> kNoEdges{};

}  // namespace

Hypergraph::Hypergraph(uint32_t uniformity, uint32_t vertex_count,
                       std::vector<std::vector<VertexId>> edges,
                       std::optional<std::vector<uint32_t>> partite_layout)
    : r_(uniformity), n_(vertex_count), parts_(std::move(partite_layout)) {
    if (r_ == 0) throw std::invalid_argument("uniformity must be positive");
    if (parts_) {
        if (parts_->size() != n_) throw std::invalid_argument("partite layout size must equal vertex count");
        for (uint32_t part : *parts_) {
            if (part >= r_) throw std::invalid_argument("partite layout part id out of range");
        }
    }

    flat_.reserve(edges.size() * r_);
    vertex_index_.assign(n_, {});
    std::vector<char> part_seen(r_, 0);

    for (size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        std::string at = "edge " + std::to_string(i);
        if (e.size() != r_) throw std::invalid_argument(at + ": expected " + std::to_string(r_) + " vertices, got " + std::to_string(e.size()));
        std::sort(e.begin(), e.end());
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] >= n_) throw std::invalid_argument(at + ": vertex id " + std::to_string(e[j]) + " out of range");
            if (j > 0 && e[j] == e[j - 1]) throw std::invalid_argument(at + ": duplicate vertex " + std::to_string(e[j]));
        }
        if (parts_) {
            std::fill(part_seen.begin(), part_seen.end(), 0);
            for (VertexId v : e) {
                uint32_t part = (*parts_)[v];
                if (part_seen[part]) throw std::invalid_argument(at + ": two vertices in part " + std::to_string(part));
                part_seen[part] = 1;
            }
        }

        EdgeIndex idx = static_cast<EdgeIndex>(i);
        for (size_t a = 0; a < e.size(); ++a) {
            vertex_index_[e[a]].push_back(idx);
            for (size_t b = a + 1; b < e.size(); ++b) {
                pair_index_[pair_key(e[a], e[b])].push_back(idx);
            }
        }
        flat_.insert(flat_.end(), e.begin(), e.end());
    }

    // Duplicate detection: compare edge rows after sorting index handles.
    uint32_t m = edge_count();
    if (m > 1) {
        std::vector<EdgeIndex> order(m);
        for (uint32_t i = 0; i < m; ++i) order[i] = i;
        auto row_less = [this](EdgeIndex a, EdgeIndex b) {
            auto ea = edge(a), eb = edge(b);
            return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
        };
        std::sort(order.begin(), order.end(), row_less);
        for (uint32_t i = 0; i + 1 < m; ++i) {
            auto ea = edge(order[i]), eb = edge(order[i + 1]);
            if (std::equal(ea.begin(), ea.end(), eb.begin())) {
                has_duplicates_ = true;
                break;
            }
        }
    }
}

bool Hypergraph::edge_contains(EdgeIndex i, VertexId v) const {
    auto e = edge(i);
    return std::binary_search(e.begin(), e.end(), v);
}

const std::vector<EdgeIndex>& Hypergraph::edges_with_pair(VertexId u, VertexId v) const {
    if (u == v) return kNoEdges;
    auto it = pair_index_.find(pair_key(u, v));
    return it == pair_index_.end() ? kNoEdges : it->second;
}

Hypergraph Hypergraph::without_edges(const std::vector<EdgeIndex>& removed) const {
    std::vector<char> drop(edge_count(), 0);
    for (EdgeIndex i : removed) {
        if (i >= edge_count()) throw std::invalid_argument("without_edges: edge index out of range");
        drop[i] = 1;
    }
    std::vector<std::vector<VertexId>> kept;
    kept.reserve(edge_count());
    for (EdgeIndex i = 0; i < edge_count(); ++i) {
        if (drop[i]) continue;
        auto e = edge(i);
        kept.emplace_back(e.begin(), e.end());
    }
    return Hypergraph(r_, n_, std::move(kept), parts_);
}

bool validate_path(const Hypergraph& h, const BergePathWitness& w) {
    size_t k = w.edges.size();
    if (k == 0 || w.core.size() != k + 1) return false;

    for (VertexId v : w.core) {
        if (v >= h.vertex_count()) return false;
    }
    for (EdgeIndex e : w.edges) {
        if (e >= h.edge_count()) return false;
    }

    // Pairwise distinctness of core vertices and of edge indices.
    auto core = w.core;
    std::sort(core.begin(), core.end());
    if (std::adjacent_find(core.begin(), core.end()) != core.end()) return false;
    auto edges = w.edges;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;

    for (size_t i = 0; i < k; ++i) {
        if (!h.edge_contains(w.edges[i], w.core[i])) return false;
        if (!h.edge_contains(w.edges[i], w.core[i + 1])) return false;
    }
    return true;
}

bool validate_theta(const Hypergraph& h, const ThetaWitness& w) {
    if (w.paths.empty()) return false;
    if (w.x == w.y) return false;

    size_t k = w.paths.front().edges.size();
    std::vector<char> internal_seen(h.vertex_count(), 0);
    std::vector<char> edge_seen(h.edge_count(), 0);

    for (const auto& path : w.paths) {
        if (!validate_path(h, path)) return false;
        if (path.edges.size() != k) return false;
        if (path.core.front() != w.x || path.core.back() != w.y) return false;
        for (size_t i = 1; i + 1 < path.core.size(); ++i) {
            VertexId v = path.core[i];
            if (internal_seen[v]) return false;
            internal_seen[v] = 1;
        }
        for (EdgeIndex e : path.edges) {
            if (edge_seen[e]) return false;
            edge_seen[e] = 1;
        }
    }
    return true;
}

}  // namespace berge
