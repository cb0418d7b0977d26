#include "berge/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>

#include "berge/rng.hpp"

namespace berge {

uint64_t ConstructionParams::vertices_per_part() const { return checked_pow(q, k); }

uint64_t ConstructionParams::vertex_count() const {
    uint64_t n = vertices_per_part();
    if (n > std::numeric_limits<uint64_t>::max() / r) throw std::overflow_error("vertex count overflow");
    return n * r;
}

uint64_t ConstructionParams::point_count() const { return checked_pow(q, k * r); }

void ConstructionParams::validate() const {
    if (k < 2) throw std::invalid_argument("construction requires k >= 2");
    if (r < 2) throw std::invalid_argument("construction requires r >= 2");
    require_prime_modulus(q);
    if (degree_or_default() < 1) throw std::invalid_argument("degree bound must be at least 1");
    if (vertex_count() > std::numeric_limits<VertexId>::max()) {
        throw std::invalid_argument("vertex count exceeds 32-bit vertex ids");
    }
    point_count();  // throws on overflow
}

uint64_t encode_vertex(const ConstructionParams& params, uint32_t part,
                       std::span<const uint64_t> coords) {
    if (part >= params.r || coords.size() != params.k) {
        throw std::invalid_argument("encode_vertex: part or coordinate arity out of range");
    }
    uint64_t idx = 0;
    uint64_t weight = 1;
    for (uint32_t i = 0; i < params.k; ++i) {
        if (coords[i] >= params.q) throw std::invalid_argument("encode_vertex: coordinate out of range");
        idx += coords[i] * weight;
        weight *= params.q;
    }
    return static_cast<uint64_t>(part) * params.vertices_per_part() + idx;
}

std::pair<uint32_t, std::vector<uint64_t>> decode_vertex(const ConstructionParams& params,
                                                         uint64_t vertex) {
    uint64_t per_part = params.vertices_per_part();
    if (vertex >= per_part * params.r) throw std::invalid_argument("decode_vertex: id out of range");
    uint32_t part = static_cast<uint32_t>(vertex / per_part);
    uint64_t idx = vertex % per_part;
    std::vector<uint64_t> coords(params.k);
    for (uint32_t i = 0; i < params.k; ++i) {
        coords[i] = idx % params.q;
        idx /= params.q;
    }
    return {part, std::move(coords)};
}

namespace {

// Marks the grid points where every polynomial vanishes. alive has one byte
// per point and is written in disjoint ranges, so the result is independent
// of the worker count.
void scan_grid(const std::vector<MultiPoly>& polys, std::vector<uint8_t>& alive,
               const BuildOptions& options) {
    size_t points = alive.size();
    std::vector<uint64_t> values(points);
    for (const auto& poly : polys) {
        evaluate_grid(poly, values, options.workers);
        for (size_t i = 0; i < points; ++i) {
            if (values[i] != 0) alive[i] = 0;
        }
    }
}

void scan_batch(const ConstructionParams& params, const std::vector<MultiPoly>& polys,
                std::vector<uint8_t>& alive, const BuildOptions& options) {
    size_t points = alive.size();
    uint32_t nvars = params.var_count();
    uint64_t q = params.q;
    constexpr size_t kChunk = 4096;

    auto run = [&](size_t lo, size_t hi) {
        std::vector<uint64_t> flat(kChunk * nvars);
        std::vector<uint64_t> values(kChunk);
        for (size_t base = lo; base < hi; base += kChunk) {
            size_t len = std::min(kChunk, hi - base);
            for (size_t i = 0; i < len; ++i) {
                uint64_t idx = base + i;
                for (uint32_t v = 0; v < nvars; ++v) {
                    flat[i * nvars + v] = idx % q;
                    idx /= q;
                }
            }
            for (const auto& poly : polys) {
                evaluate_batch_flat(poly, std::span(flat.data(), len * nvars),
                                    std::span(values.data(), len), 1);
                for (size_t i = 0; i < len; ++i) {
                    if (values[i] != 0) alive[base + i] = 0;
                }
            }
        }
    };

    unsigned workers = std::max(1u, options.workers);
    if (workers == 1 || points < 2 * kChunk) {
        run(0, points);
        return;
    }
    std::vector<std::thread> pool;
    size_t per = (points / kChunk + workers - 1) / workers * kChunk;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = std::min(points, w * per);
        size_t hi = std::min(points, lo + per);
        if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

RandomPolyGraph build_graph_with_polys(const ConstructionParams& params,
                                       std::vector<MultiPoly> polys, const BuildOptions& options) {
    params.validate();
    if (polys.size() != params.poly_count()) {
        throw std::invalid_argument("expected " + std::to_string(params.poly_count()) +
                                    " polynomials, got " + std::to_string(polys.size()));
    }
    for (const auto& poly : polys) {
        if (poly.modulus != params.q || poly.nvars() != params.var_count()) {
            throw std::invalid_argument("polynomial field or arity does not match the construction");
        }
    }
    uint64_t points = params.point_count();
    if (points > options.point_budget) {
        throw BudgetError("edge scan needs a point budget of " + std::to_string(points) +
                              " (configured: " + std::to_string(options.point_budget) + ")",
                          points);
    }

    std::vector<uint8_t> alive(points, 1);
    if (options.strategy == EvalStrategy::grid) {
        scan_grid(polys, alive, options);
    } else {
        scan_batch(params, polys, alive, options);
    }

    // Harvest edges in ascending tuple order. Tuple index encodes the vertex
    // of part j in base-N digit j, so decoded ids are already ascending.
    uint64_t per_part = params.vertices_per_part();
    std::vector<std::vector<VertexId>> edges;
    std::vector<VertexId> edge(params.r);
    for (uint64_t idx = 0; idx < points; ++idx) {
        if (!alive[idx]) continue;
        uint64_t rest = idx;
        for (uint32_t j = 0; j < params.r; ++j) {
            edge[j] = static_cast<VertexId>(j * per_part + rest % per_part);
            rest /= per_part;
        }
        edges.push_back(edge);
    }

    std::vector<uint32_t> parts(params.vertex_count());
    for (uint64_t v = 0; v < parts.size(); ++v) parts[v] = static_cast<uint32_t>(v / per_part);

    Hypergraph graph(params.r, static_cast<uint32_t>(params.vertex_count()), std::move(edges),
                     std::move(parts));
    return RandomPolyGraph{std::move(graph), std::move(polys)};
}

RandomPolyGraph build_graph(const ConstructionParams& params, const BuildOptions& options) {
    params.validate();
    auto basis = std::make_shared<const MonomialBasis>(params.var_count(), params.degree_or_default());
    Rng master(params.seed);
    std::vector<MultiPoly> polys;
    polys.reserve(params.poly_count());
    for (uint32_t i = 0; i < params.poly_count(); ++i) {
        Rng stream = master.derive(i);
        polys.push_back(sample_uniform(basis, params.q, stream));
    }
    return build_graph_with_polys(params, std::move(polys), options);
}

uint64_t PathCensus::max_count() const {
    uint64_t best = 0;
    for (const auto& e : entries) best = std::max(best, e.count);
    return best;
}

std::map<uint64_t, uint64_t> PathCensus::histogram() const {
    std::map<uint64_t, uint64_t> h;
    for (const auto& e : entries) ++h[e.count];
    return h;
}

uint64_t PathCensus::count_above(uint64_t threshold) const {
    uint64_t n = 0;
    for (const auto& e : entries) {
        if (e.count > threshold) ++n;
    }
    return n;
}

bool PathCensus::any_inconclusive() const {
    for (const auto& e : entries) {
        if (e.inconclusive) return true;
    }
    return false;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> select_pairs(const Hypergraph& h,
                                                        const CensusOptions& options,
                                                        bool& sampled) {
    uint64_t n = h.vertex_count();
    const auto& parts = h.partite_layout();
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (options.cross_part_only && parts && (*parts)[x] == (*parts)[y]) continue;
            all.emplace_back(x, y);
        }
    }
    uint64_t limit = options.pair_limit;
    if (limit == 0) {
        limit = n <= kExhaustivePairLimit ? all.size() : kDefaultPairSample;
    }
    sampled = all.size() > limit;
    if (!sampled) return all;

    // Uniform sample of `limit` distinct pair indices.
    Rng rng(options.sample_seed);
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(limit * 2);
    while (chosen.size() < limit) chosen.insert(rng.below(all.size()));
    std::vector<uint64_t> idx(chosen.begin(), chosen.end());
    std::sort(idx.begin(), idx.end());
    std::vector<std::pair<VertexId, VertexId>> picked;
    picked.reserve(limit);
    for (uint64_t i : idx) picked.push_back(all[i]);
    return picked;
}

}  // namespace

PathCensus census(const Hypergraph& h, uint32_t k, const CensusOptions& options) {
    if (options.cap == 0) throw std::invalid_argument("census cap must be at least 1");
    PathCensus out;
    out.k = k;
    out.cap = options.cap;
    out.sample_seed = options.sample_seed;

    auto pairs = select_pairs(h, options, out.sampled);
    out.entries.resize(pairs.size());

    auto run = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            auto [x, y] = pairs[i];
            auto result = count_paths(h, PathQuery{x, y, k, options.cap}, options.limits);
            out.entries[i] = PairCount{x, y, result.count, result.hit_cap, result.exhausted_budget};
        }
    };

    unsigned workers = std::max(1u, options.workers);
    if (workers == 1 || pairs.size() < 64) {
        run(0, pairs.size());
    } else {
        std::vector<std::thread> pool;
        size_t per = (pairs.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            size_t lo = std::min(pairs.size(), w * per);
            size_t hi = std::min(pairs.size(), lo + per);
            if (lo < hi) pool.emplace_back(run, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> bad_pairs(const PathCensus& c, uint64_t threshold) {
    if (threshold == 0) throw std::invalid_argument("bad-pair threshold must be at least 1");
    if (c.cap <= threshold) {
        throw std::invalid_argument("census cap " + std::to_string(c.cap) +
                                    " cannot certify threshold " + std::to_string(threshold));
    }
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& e : c.entries) {
        if (e.count > threshold) out.emplace_back(e.x, e.y);
    }
    return out;
}

RepairResult repair(const Hypergraph& h, uint32_t k, uint64_t threshold,
                    const RepairOptions& options) {
    if (threshold == 0) throw std::invalid_argument("repair threshold must be at least 1");

    // Work on a shrinking copy; surviving edges keep their order, and the
    // log refers to indices in the original edge list.
    Hypergraph current = h;
    std::vector<EdgeIndex> original_index(h.edge_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) original_index[i] = i;
    std::vector<EdgeIndex> deleted;

    for (;;) {
        // First bad pair in (x, y) order.
        bool found = false;
        VertexId bad_x = 0, bad_y = 0;
        uint32_t n = current.vertex_count();
        for (VertexId x = 0; x < n && !found; ++x) {
            for (VertexId y = x + 1; y < n && !found; ++y) {
                auto c = count_paths(current, PathQuery{x, y, k, threshold + 1}, options.limits);
                if (c.count > threshold) {
                    found = true;
                    bad_x = x;
                    bad_y = y;
                }
            }
        }
        if (!found) break;

        auto paths =
            enumerate_paths(current, PathQuery{bad_x, bad_y, k, options.enum_cap}, options.limits);
        if (paths.paths.empty()) {
            throw std::runtime_error("repair: bad pair found but no path enumerated; raise the node budget");
        }
        // Delete the edge lying on the most of this pair's paths; ties go to
        // the lowest index.
        std::vector<uint64_t> freq(current.edge_count(), 0);
        for (const auto& p : paths.paths) {
            for (EdgeIndex e : p.edges) ++freq[e];
        }
        EdgeIndex victim = 0;
        uint64_t best = 0;
        for (EdgeIndex e = 0; e < current.edge_count(); ++e) {
            if (freq[e] > best) {
                best = freq[e];
                victim = e;
            }
        }
        deleted.push_back(original_index[victim]);
        current = current.without_edges({victim});
        original_index.erase(original_index.begin() + victim);
    }
    return RepairResult{std::move(current), std::move(deleted)};
}

MomentEstimate estimate_moment(const Hypergraph& h, uint32_t k, uint32_t m, uint64_t pair_sample,
                               uint64_t cap, uint64_t sample_seed) {
    if (m < 1) throw std::invalid_argument("moment order must be at least 1");
    if (m > 2 * k + 1) throw std::invalid_argument("moment order must satisfy m <= 2k+1");
    if (cap == 0) throw std::invalid_argument("moment cap must be at least 1");

    CensusOptions copts;
    copts.cap = cap;
    copts.pair_limit = pair_sample == 0 ? h.vertex_count() * (h.vertex_count() + 1ull) : pair_sample;
    copts.sample_seed = sample_seed;
    PathCensus c = census(h, k, copts);

    MomentEstimate out;
    out.pairs = c.entries.size();
    if (c.entries.empty()) return out;
    long double acc = 0;
    for (const auto& e : c.entries) {
        if (e.capped) out.lower_bound_only = true;
        acc += std::pow(static_cast<long double>(e.count), static_cast<long double>(m));
    }
    out.value = static_cast<double>(acc / c.entries.size());
    return out;
}

}  // namespace berge
