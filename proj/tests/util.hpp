#pragma once

#include <algorithm>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/rng.hpp"

namespace berge::testutil {

// Random r-uniform hypergraph: m edges drawn independently as uniform
// r-subsets of [0, n). Duplicate edges can and do occur.
inline Hypergraph random_hypergraph(Rng& rng, uint32_t n, uint32_t m, uint32_t r) {
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(m);
    std::vector<VertexId> pool(n);
    for (uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (uint32_t e = 0; e < m; ++e) {
        // partial Fisher-Yates for an r-subset
        for (uint32_t i = 0; i < r; ++i) {
            uint32_t j = i + static_cast<uint32_t>(rng.below(n - i));
            std::swap(pool[i], pool[j]);
        }
        edges.emplace_back(pool.begin(), pool.begin() + r);
    }
    return Hypergraph(r, n, std::move(edges));
}

// 2-uniform cycle v_0 - v_1 - ... - v_{len-1} - v_0.
inline Hypergraph cycle_graph(uint32_t len) {
    std::vector<std::vector<VertexId>> edges;
    for (uint32_t i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
    return Hypergraph(2, len, std::move(edges));
}

}  // namespace berge::testutil
