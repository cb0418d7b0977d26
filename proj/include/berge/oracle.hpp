#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge::oracle {

// Reference implementation by exhaustive enumeration, kept deliberately free
// of the search module's indexing and pruning so the two can check each
// other. Instances above the soft limits are refused.
inline constexpr uint32_t kMaxVertices = 10;
inline constexpr uint32_t kMaxEdges = 14;

struct SoftLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact path count via enumeration of all sequences of k distinct edge
// indices and k+1 distinct vertices satisfying the containment conditions.
uint64_t count_paths(const Hypergraph& h, VertexId x, VertexId y, uint32_t k);

std::vector<BergePathWitness> enumerate_paths(const Hypergraph& h, VertexId x, VertexId y,
                                              uint32_t k);

// Exhaustive over all endpoint pairs and all t-subsets of enumerated paths.
bool has_theta(const Hypergraph& h, uint32_t k, uint32_t t);

}  // namespace berge::oracle
