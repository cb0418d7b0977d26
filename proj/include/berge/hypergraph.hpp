#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace berge {

using VertexId = uint32_t;
using EdgeIndex = uint32_t;

/**
 * r-uniform hypergraph on vertices [0, n). Edges are stored with their
 * vertices sorted ascending, but the edge *list* keeps the input order;
 * several algorithms here depend on that order. Duplicate edges are allowed
 * and keep distinct indices. Immutable after construction, so concurrent
 * reads are safe.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    // Throws std::invalid_argument naming the offending edge position when an
    // edge is malformed (wrong arity, duplicate vertex, id out of range) or
    // when a partite layout is inconsistent.
    Hypergraph(uint32_t uniformity, uint32_t vertex_count, std::vector<std::vector<VertexId>> edges,
               std::optional<std::vector<uint32_t>> partite_layout = std::nullopt);

    uint32_t uniformity() const { return r_; }
    uint32_t vertex_count() const { return n_; }
    uint32_t edge_count() const { return static_cast<uint32_t>(flat_.size() / (r_ == 0 ? 1 : r_)); }

    std::span<const VertexId> edge(EdgeIndex i) const {
        return std::span<const VertexId>(flat_.data() + static_cast<size_t>(i) * r_, r_);
    }

    bool edge_contains(EdgeIndex i, VertexId v) const;

    // Edge indices containing v, ascending.
    const std::vector<EdgeIndex>& edges_with_vertex(VertexId v) const { return vertex_index_[v]; }

    // Edge indices containing both u and v, ascending. Empty when u == v or
    // either id is out of range.
    const std::vector<EdgeIndex>& edges_with_pair(VertexId u, VertexId v) const;

    bool has_duplicate_edges() const { return has_duplicates_; }

    const std::optional<std::vector<uint32_t>>& partite_layout() const { return parts_; }

    // Copy with the given edge indices removed; surviving edges keep their
    // relative order.
    Hypergraph without_edges(const std::vector<EdgeIndex>& removed) const;

private:
    uint32_t r_ = 0;
    uint32_t n_ = 0;
    std::vector<VertexId> flat_;  // edge i occupies [i*r_, (i+1)*r_), sorted
    std::vector<std::vector<EdgeIndex>> vertex_index_;
    std::unordered_map<uint64_t, std::vector<EdgeIndex>> pair_index_;
    std::optional<std::vector<uint32_t>> parts_;
    bool has_duplicates_ = false;
};

/// Berge path: core vertices v_0..v_k plus distinct edges h_1..h_k with
/// {v_{i-1}, v_i} contained in h_i.
struct BergePathWitness {
    std::vector<VertexId> core;
    std::vector<EdgeIndex> edges;

    uint32_t length() const { return static_cast<uint32_t>(edges.size()); }

    friend bool operator==(const BergePathWitness&, const BergePathWitness&) = default;
    friend auto operator<=>(const BergePathWitness&, const BergePathWitness&) = default;
};

/// t Berge paths of equal length from x to y with pairwise disjoint internal
/// core vertices and globally distinct edges.
struct ThetaWitness {
    VertexId x = 0;
    VertexId y = 0;
    std::vector<BergePathWitness> paths;

    friend bool operator==(const ThetaWitness&, const ThetaWitness&) = default;
};

// True iff every BergePathWitness invariant holds against h. Out-of-range
// vertex or edge ids yield false, never UB.
bool validate_path(const Hypergraph& h, const BergePathWitness& w);

// True iff every ThetaWitness invariant holds against h. Paths must run from
// w.x to w.y in that orientation.
bool validate_theta(const Hypergraph& h, const ThetaWitness& w);

}  // namespace berge
