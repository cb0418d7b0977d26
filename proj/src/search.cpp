#include "berge/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace berge {

namespace {

void check_query(const Hypergraph& h, const PathQuery& q) {
    if (q.x == q.y) throw std::invalid_argument("path query endpoints must differ");
    if (q.k == 0) throw std::invalid_argument("path length must be at least 1");
    if (q.x >= h.vertex_count() || q.y >= h.vertex_count()) {
        throw std::invalid_argument("path query endpoint out of range");
    }
}

// Depth-first enumeration of Berge paths from x to y of length k. Paths are
// grown by extending the last core vertex; candidate extensions at each depth
// are visited in ascending (next vertex, edge index) order, which fixes the
// enumeration order deterministically. Optional forbid sets support theta
// packing. Every candidate inspection is charged against the node budget.
class PathDfs {
public:
    PathDfs(const Hypergraph& h, VertexId x, VertexId y, uint32_t k, uint64_t* budget,
            const std::vector<char>* forbid_vertex = nullptr,
            const std::vector<char>* forbid_edge = nullptr)
        : h_(h),
          y_(y),
          k_(k),
          budget_(budget),
          forbid_vertex_(forbid_vertex),
          forbid_edge_(forbid_edge),
          used_vertex_(h.vertex_count(), 0),
          used_edge_(h.edge_count(), 0),
          cand_stack_(k) {
        core_.reserve(k + 1);
        edges_.reserve(k);
        core_.push_back(x);
        used_vertex_[x] = 1;
    }

    bool exhausted() const { return exhausted_; }

    // Visitor receives (core, edges) of every complete path and returns false
    // to stop the search. run() returns false iff stopped early (by the
    // visitor or by budget exhaustion).
    template <typename Visitor>
    bool run(Visitor&& visit) {
        return extend(visit);
    }

private:
    bool charge() {
        if (*budget_ == 0) {
            exhausted_ = true;
            return false;
        }
        --*budget_;
        return true;
    }

    template <typename Visitor>
    bool extend(Visitor& visit) {
        uint32_t depth = static_cast<uint32_t>(edges_.size());
        VertexId u = core_.back();

        if (depth == k_ - 1) {
            for (EdgeIndex e : h_.edges_with_pair(u, y_)) {
                if (!charge()) return false;
                if (used_edge_[e] || (forbid_edge_ && (*forbid_edge_)[e])) continue;
                core_.push_back(y_);
                edges_.push_back(e);
                bool keep = visit(core_, edges_);
                core_.pop_back();
                edges_.pop_back();
                if (!keep) return false;
            }
            return true;
        }

        auto& cands = cand_stack_[depth];
        cands.clear();
        for (EdgeIndex e : h_.edges_with_vertex(u)) {
            if (!charge()) return false;
            if (used_edge_[e] || (forbid_edge_ && (*forbid_edge_)[e])) continue;
            for (VertexId w : h_.edge(e)) {
                if (w == u || w == y_ || used_vertex_[w]) continue;
                if (forbid_vertex_ && (*forbid_vertex_)[w]) continue;
                cands.emplace_back(w, e);
            }
        }
        std::sort(cands.begin(), cands.end());

        for (auto [w, e] : cands) {
            if (!charge()) return false;
            core_.push_back(w);
            edges_.push_back(e);
            used_vertex_[w] = 1;
            used_edge_[e] = 1;
            bool keep = extend(visit);
            used_edge_[e] = 0;
            used_vertex_[w] = 0;
            core_.pop_back();
            edges_.pop_back();
            if (!keep) return false;
        }
        return true;
    }

    const Hypergraph& h_;
    VertexId y_;
    uint32_t k_;
    uint64_t* budget_;
    const std::vector<char>* forbid_vertex_;
    const std::vector<char>* forbid_edge_;
    std::vector<char> used_vertex_;
    std::vector<char> used_edge_;
    std::vector<VertexId> core_;
    std::vector<EdgeIndex> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeIndex>>> cand_stack_;
    bool exhausted_ = false;
};

// Backtracking packer: builds t pairwise-compatible paths between a fixed
// pair, regenerating candidate paths lazily under the forbid sets of the
// paths already chosen. Chosen paths ascend in (core, edges) order, so each
// unordered path set is tried exactly once.
class ThetaPacker {
public:
    ThetaPacker(const Hypergraph& h, VertexId x, VertexId y, uint32_t k, uint32_t t,
                uint64_t* budget)
        : h_(h),
          x_(x),
          y_(y),
          k_(k),
          t_(t),
          budget_(budget),
          forbid_vertex_(h.vertex_count(), 0),
          forbid_edge_(h.edge_count(), 0) {}

    bool exhausted() const { return exhausted_; }
    std::vector<BergePathWitness>& chosen() { return chosen_; }

    bool pack() {
        if (chosen_.size() == t_) return true;
        bool found = false;
        PathDfs dfs(h_, x_, y_, k_, budget_, &forbid_vertex_, &forbid_edge_);
        dfs.run([&](const std::vector<VertexId>& core, const std::vector<EdgeIndex>& edges) {
            BergePathWitness w{core, edges};
            if (!chosen_.empty() && !(chosen_.back() < w)) return true;
            mark(w, 1);
            chosen_.push_back(std::move(w));
            if (pack()) {
                found = true;
                return false;
            }
            mark(chosen_.back(), 0);
            chosen_.pop_back();
            return !exhausted_;
        });
        if (dfs.exhausted()) exhausted_ = true;
        return found;
    }

private:
    void mark(const BergePathWitness& w, char flag) {
        for (size_t i = 1; i + 1 < w.core.size(); ++i) forbid_vertex_[w.core[i]] = flag;
        for (EdgeIndex e : w.edges) forbid_edge_[e] = flag;
    }

    const Hypergraph& h_;
    VertexId x_;
    VertexId y_;
    uint32_t k_;
    uint32_t t_;
    uint64_t* budget_;
    std::vector<char> forbid_vertex_;
    std::vector<char> forbid_edge_;
    std::vector<BergePathWitness> chosen_;
    bool exhausted_ = false;
};

}  // namespace

CountResult count_paths(const Hypergraph& h, const PathQuery& q, const SearchLimits& limits) {
    check_query(h, q);
    uint64_t budget = limits.node_budget;
    CountResult result;
    PathDfs dfs(h, q.x, q.y, q.k, &budget);
    dfs.run([&](const auto&, const auto&) {
        ++result.count;
        if (q.cap != 0 && result.count == q.cap) {
            result.hit_cap = true;
            return false;
        }
        return true;
    });
    result.exhausted_budget = dfs.exhausted();
    return result;
}

EnumResult enumerate_paths(const Hypergraph& h, const PathQuery& q, const SearchLimits& limits) {
    check_query(h, q);
    uint64_t budget = limits.node_budget;
    EnumResult result;
    PathDfs dfs(h, q.x, q.y, q.k, &budget);
    dfs.run([&](const std::vector<VertexId>& core, const std::vector<EdgeIndex>& edges) {
        result.paths.push_back(BergePathWitness{core, edges});
        if (q.cap != 0 && result.paths.size() == q.cap) {
            result.hit_cap = true;
            return false;
        }
        return true;
    });
    result.exhausted_budget = dfs.exhausted();
    return result;
}

ThetaSearch find_theta(const Hypergraph& h, uint32_t k, uint32_t t, const SearchLimits& limits) {
    if (k == 0) throw std::invalid_argument("theta path length must be at least 1");
    if (t == 0) throw std::invalid_argument("theta path count must be at least 1");

    ThetaSearch out;
    uint64_t budget = limits.node_budget;
    bool any_inconclusive = false;

    uint32_t n = h.vertex_count();
    for (VertexId x = 0; x < n && budget > 0; ++x) {
        for (VertexId y = x + 1; y < n && budget > 0; ++y) {
            // A pair with fewer than t paths cannot host a theta.
            uint64_t pre_count = 0;
            bool pre_exhausted = false;
            {
                PathDfs pre(h, x, y, k, &budget);
                pre.run([&](const auto&, const auto&) { return ++pre_count < t; });
                pre_exhausted = pre.exhausted();
            }
            if (pre_exhausted) {
                any_inconclusive = true;
                continue;
            }
            if (pre_count < t) continue;

            ThetaPacker packer(h, x, y, k, t, &budget);
            if (packer.pack()) {
                out.status = ThetaStatus::present;
                out.witness = ThetaWitness{x, y, std::move(packer.chosen())};
                out.nodes_used = limits.node_budget - budget;
                return out;
            }
            if (packer.exhausted()) any_inconclusive = true;
        }
    }
    if (budget == 0) any_inconclusive = true;

    out.status = any_inconclusive ? ThetaStatus::inconclusive : ThetaStatus::absent;
    out.nodes_used = limits.node_budget - budget;
    return out;
}

Tri is_theta_free(const Hypergraph& h, uint32_t k, uint32_t t, const SearchLimits& limits) {
    switch (find_theta(h, k, t, limits).status) {
        case ThetaStatus::present:
            return Tri::no;
        case ThetaStatus::absent:
            return Tri::yes;
        default:
            return Tri::unknown;
    }
}

}  // namespace berge
