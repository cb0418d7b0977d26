#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/poly.hpp"
#include "berge/search.hpp"

namespace berge {

/**
 * Parameters of the random polynomial graph: an r-partite r-uniform
 * hypergraph whose parts are copies of F_q^k and whose edges are the common
 * zeros of s = k(r-1)-1 independent uniform random polynomials in kr
 * variables of degree at most d.
 */
struct ConstructionParams {
    uint32_t k = 2;
    uint32_t r = 3;
    uint64_t q = 3;
    uint32_t degree = 0;  // 0 = default k(2k+1)
    uint64_t seed = 0;

    uint32_t degree_or_default() const { return degree != 0 ? degree : k * (2 * k + 1); }
    uint32_t poly_count() const { return k * (r - 1) - 1; }
    uint32_t var_count() const { return k * r; }
    uint64_t vertices_per_part() const;  // N = q^k
    uint64_t vertex_count() const;       // r * N
    uint64_t point_count() const;        // q^{kr}

    // Throws std::invalid_argument on any violation (k >= 2, r >= 2, q prime,
    // representable sizes).
    void validate() const;
};

// Vertex id <-> (part, coordinates) bijection: id = part*q^k + sum_i c_i*q^i.
uint64_t encode_vertex(const ConstructionParams& params, uint32_t part,
                       std::span<const uint64_t> coords);
std::pair<uint32_t, std::vector<uint64_t>> decode_vertex(const ConstructionParams& params,
                                                         uint64_t vertex);

enum class EvalStrategy {
    grid,   // fold one variable at a time over the full grid
    batch,  // per-point power tables in chunks
};

inline constexpr uint64_t kDefaultPointBudget = 1ull << 24;

struct BuildOptions {
    EvalStrategy strategy = EvalStrategy::grid;
    unsigned workers = 1;
    uint64_t point_budget = kDefaultPointBudget;
};

/// Raised when a requested scan exceeds the configured work budget; carries
/// the budget the request would need.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, uint64_t required_budget)
        : std::runtime_error(what), required(required_budget) {}
    uint64_t required;
};

struct RandomPolyGraph {
    Hypergraph graph;
    std::vector<MultiPoly> polys;  // the generation record
};

// Samples the s polynomials from the seed and scans all q^{kr} candidate
// tuples. Deterministic given (params, seed); the edge list is ordered by
// ascending tuple index and independent of strategy and worker count.
RandomPolyGraph build_graph(const ConstructionParams& params, const BuildOptions& options = {});

// Same scan with caller-supplied polynomials (used by tests and archives).
RandomPolyGraph build_graph_with_polys(const ConstructionParams& params,
                                       std::vector<MultiPoly> polys,
                                       const BuildOptions& options = {});

struct PairCount {
    VertexId x = 0;
    VertexId y = 0;
    uint64_t count = 0;
    bool capped = false;
    bool inconclusive = false;
};

/// Per-pair Berge path counts plus summary queries.
struct PathCensus {
    uint32_t k = 0;
    uint64_t cap = 0;
    bool sampled = false;     // true when entries cover a sampled subset of pairs
    uint64_t sample_seed = 0;
    std::vector<PairCount> entries;  // ascending (x, y)

    uint64_t pairs_examined() const { return entries.size(); }
    uint64_t max_count() const;
    std::map<uint64_t, uint64_t> histogram() const;
    uint64_t count_above(uint64_t threshold) const;
    bool any_inconclusive() const;
};

// Pairs examined per census when the pair population is too large to scan
// exhaustively.
inline constexpr uint64_t kDefaultPairSample = 10000;
inline constexpr uint64_t kExhaustivePairLimit = 2000;  // max n for the full scan

struct CensusOptions {
    uint64_t cap = 1024;
    uint64_t pair_limit = 0;  // 0 = all pairs when n <= kExhaustivePairLimit, else sample
    uint64_t sample_seed = 0;
    bool cross_part_only = false;  // restrict to pairs in different parts
    unsigned workers = 1;
    SearchLimits limits;
};

PathCensus census(const Hypergraph& h, uint32_t k, const CensusOptions& options = {});

// Exactly the pairs with count > threshold. Requires cap > threshold, since a
// capped count cannot certify the comparison otherwise.
std::vector<std::pair<VertexId, VertexId>> bad_pairs(const PathCensus& c, uint64_t threshold);

struct RepairOptions {
    uint64_t enum_cap = 4096;  // per-pair path enumeration cap when choosing a deletion
    SearchLimits limits;
};

struct RepairResult {
    Hypergraph graph;
    std::vector<EdgeIndex> deleted_edges;  // original edge indices, deletion order
};

// Deletes edges until no vertex pair has more than `threshold` Berge paths of
// length k: repeatedly takes the first bad pair in (x, y) order and removes
// the edge lying on the most of its paths. Every deletion strictly reduces
// the total path count, so this terminates. The result then contains no
// theta with threshold+1 internally disjoint length-k paths between any pair.
RepairResult repair(const Hypergraph& h, uint32_t k, uint64_t threshold,
                    const RepairOptions& options = {});

struct MomentEstimate {
    double value = 0.0;
    uint64_t pairs = 0;
    bool lower_bound_only = false;  // some sampled pair hit the cap
};

// Mean of count^m over sampled pairs (pair_sample = 0 means every pair).
// Requires 1 <= m <= 2k+1.
MomentEstimate estimate_moment(const Hypergraph& h, uint32_t k, uint32_t m, uint64_t pair_sample,
                               uint64_t cap, uint64_t sample_seed = 0);

}  // namespace berge
