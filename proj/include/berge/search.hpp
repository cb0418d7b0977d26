#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

/// Berge path query between two distinct vertices.
struct PathQuery {
    VertexId x = 0;
    VertexId y = 0;
    uint32_t k = 1;
    uint64_t cap = 0;  // 0 = unlimited
};

struct SearchLimits {
    // Extension attempts charged across one call; exceeding it yields an
    // inconclusive outcome instead of a silent wrong answer.
    uint64_t node_budget = 1ull << 26;
};

struct CountResult {
    uint64_t count = 0;
    bool hit_cap = false;
    bool exhausted_budget = false;

    bool exact() const { return !hit_cap && !exhausted_budget; }
};

struct EnumResult {
    std::vector<BergePathWitness> paths;
    bool hit_cap = false;
    bool exhausted_budget = false;
};

enum class ThetaStatus { present, absent, inconclusive };

struct ThetaSearch {
    ThetaStatus status = ThetaStatus::absent;
    std::optional<ThetaWitness> witness;  // set iff present
    uint64_t nodes_used = 0;
};

enum class Tri { yes, no, unknown };

// Number of Berge paths of length q.k from q.x to q.y, capped at q.cap when
// nonzero. Deterministic and independent of evaluation order. Throws
// std::invalid_argument on an invalid query (x == y, k == 0, id range).
CountResult count_paths(const Hypergraph& h, const PathQuery& q, const SearchLimits& limits = {});

// As count_paths, but returns the witnesses (each passes validate_path).
EnumResult enumerate_paths(const Hypergraph& h, const PathQuery& q, const SearchLimits& limits = {});

// Search the whole hypergraph for t Berge paths of length k between some
// vertex pair, internally disjoint and with globally distinct edges.
// Exhaustive within the node budget: absent means no witness exists, and a
// budget abort is reported as inconclusive, never as absent. k == 1 is the
// parallel-edge convention: t distinct edges containing the same pair.
ThetaSearch find_theta(const Hypergraph& h, uint32_t k, uint32_t t, const SearchLimits& limits = {});

// Negation of find_theta presence; unknown when the search was inconclusive.
Tri is_theta_free(const Hypergraph& h, uint32_t k, uint32_t t, const SearchLimits& limits = {});

}  // namespace berge
