#include "berge/oracle.hpp"

#include <algorithm>
#include <string>

namespace berge::oracle {

namespace {

void check_limits(const Hypergraph& h) {
    if (h.vertex_count() > kMaxVertices || h.edge_count() > kMaxEdges) {
        throw SoftLimitError("oracle refuses instances above n <= " + std::to_string(kMaxVertices) +
                             ", m <= " + std::to_string(kMaxEdges));
    }
}

bool edge_has(const Hypergraph& h, EdgeIndex e, VertexId v) {
    auto row = h.edge(e);
    return std::find(row.begin(), row.end(), v) != row.end();
}

// Extends the sequence one (edge, vertex) step at a time, trying every edge
// index and every vertex id at each position.
void extend(const Hypergraph& h, VertexId y, uint32_t k, std::vector<VertexId>& core,
            std::vector<EdgeIndex>& edges, std::vector<char>& used_vertex,
            std::vector<char>& used_edge, std::vector<BergePathWitness>& out) {
    if (edges.size() == k) {
        out.push_back(BergePathWitness{core, edges});
        return;
    }
    bool last = edges.size() + 1 == k;
    VertexId u = core.back();
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        if (used_edge[e] || !edge_has(h, e, u)) continue;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            if (last != (v == y)) continue;
            if (used_vertex[v] || !edge_has(h, e, v)) continue;
            core.push_back(v);
            edges.push_back(e);
            used_vertex[v] = 1;
            used_edge[e] = 1;
            extend(h, y, k, core, edges, used_vertex, used_edge, out);
            used_edge[e] = 0;
            used_vertex[v] = 0;
            edges.pop_back();
            core.pop_back();
        }
    }
}

bool pack_disjoint(const std::vector<BergePathWitness>& paths, size_t from, uint32_t remaining,
                   std::vector<char>& used_vertex, std::vector<char>& used_edge) {
    if (remaining == 0) return true;
    for (size_t i = from; i < paths.size(); ++i) {
        const auto& p = paths[i];
        bool clash = false;
        for (size_t j = 1; !clash && j + 1 < p.core.size(); ++j) clash = used_vertex[p.core[j]];
        for (size_t j = 0; !clash && j < p.edges.size(); ++j) clash = used_edge[p.edges[j]];
        if (clash) continue;
        for (size_t j = 1; j + 1 < p.core.size(); ++j) used_vertex[p.core[j]] = 1;
        for (EdgeIndex e : p.edges) used_edge[e] = 1;
        if (pack_disjoint(paths, i + 1, remaining - 1, used_vertex, used_edge)) return true;
        for (size_t j = 1; j + 1 < p.core.size(); ++j) used_vertex[p.core[j]] = 0;
        for (EdgeIndex e : p.edges) used_edge[e] = 0;
    }
    return false;
}

}  // namespace

std::vector<BergePathWitness> enumerate_paths(const Hypergraph& h, VertexId x, VertexId y,
                                              uint32_t k) {
    check_limits(h);
    if (x == y) throw std::invalid_argument("oracle path endpoints must differ");
    if (k == 0) throw std::invalid_argument("oracle path length must be at least 1");
    if (x >= h.vertex_count() || y >= h.vertex_count()) {
        throw std::invalid_argument("oracle path endpoint out of range");
    }
    std::vector<BergePathWitness> out;
    std::vector<VertexId> core{x};
    std::vector<EdgeIndex> edges;
    std::vector<char> used_vertex(h.vertex_count(), 0);
    std::vector<char> used_edge(h.edge_count(), 0);
    used_vertex[x] = 1;
    extend(h, y, k, core, edges, used_vertex, used_edge, out);
    return out;
}

uint64_t count_paths(const Hypergraph& h, VertexId x, VertexId y, uint32_t k) {
    return enumerate_paths(h, x, y, k).size();
}

bool has_theta(const Hypergraph& h, uint32_t k, uint32_t t) {
    check_limits(h);
    if (k == 0 || t == 0) throw std::invalid_argument("oracle theta parameters must be positive");
    if (static_cast<uint64_t>(k) * t > h.edge_count()) return false;  // needs k*t distinct edges
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
        for (VertexId y = x + 1; y < h.vertex_count(); ++y) {
            auto paths = enumerate_paths(h, x, y, k);
            if (paths.size() < t) continue;
            std::vector<char> used_vertex(h.vertex_count(), 0);
            std::vector<char> used_edge(h.edge_count(), 0);
            if (pack_disjoint(paths, 0, t, used_vertex, used_edge)) return true;
        }
    }
    return false;
}

}  // namespace berge::oracle
