#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

enum class TieBreak {
    lexicographic,  // least m-set among minimum-multiplicity candidates
    seeded_random,  // uniform among minimum-multiplicity candidates
};

struct ReductionParams {
    uint32_t m = 2;  // target uniformity, 2 <= m < r
    TieBreak tie_break = TieBreak::lexicographic;
    uint64_t tie_seed = 0;  // used only by seeded_random
};

/// One selected m-set together with the hyperedge it came from.
struct ReducedInstance {
    std::vector<VertexId> m_set;  // sorted ascending
    EdgeIndex source_edge;
};

/**
 * m-uniform multigraph produced by per-hyperedge m-set selection. Instance i
 * always comes from hyperedge i, so the instance list is index-aligned with
 * the source edge list.
 */
class ReducedGraph {
public:
    ReducedGraph(uint32_t uniformity, uint32_t vertex_count, std::vector<ReducedInstance> instances);

    uint32_t uniformity() const { return m_; }
    uint32_t vertex_count() const { return n_; }
    const std::vector<ReducedInstance>& instances() const { return instances_; }

    // Number of instances whose m-set equals the given sorted vertex set.
    uint32_t multiplicity(const std::vector<VertexId>& m_set) const;
    uint32_t max_multiplicity() const;
    const std::map<std::vector<VertexId>, uint32_t>& multiplicities() const { return multiplicity_; }

    // View of the instances as an m-uniform multihypergraph; instance i
    // becomes edge i, so witnesses carry over by index.
    Hypergraph as_hypergraph() const;

private:
    uint32_t m_ = 0;
    uint32_t n_ = 0;
    std::vector<ReducedInstance> instances_;
    std::map<std::vector<VertexId>, uint32_t> multiplicity_;
};

// Walks the hyperedges of h in stored order and picks from each the m-subset
// with the fewest prior selections, ties broken per params. Deterministic
// given the edge order and tie rule. Throws std::invalid_argument unless
// 2 <= m < r.
ReducedGraph reduce(const Hypergraph& h, const ReductionParams& params);

// Exact value of sum_{j=1}^{k+1} C(m*k*(t-1) + j*m - m, r - m) + k + 1 with
// C(a,b) = 0 when a < b. Throws std::invalid_argument on parameter range
// violations and std::overflow_error if the value exceeds uint64.
uint64_t multiplicity_bound(uint32_t k, uint32_t t, uint32_t r, uint32_t m);

// Maps a theta witness on g.as_hypergraph() to one on the source hypergraph
// by replacing each instance index with its source edge. Throws
// std::invalid_argument when w is not valid in g.
ThetaWitness lift_theta(const ReducedGraph& g, const ThetaWitness& w);

}  // namespace berge
