#include "berge/io.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace berge {

namespace {

// Next non-comment, non-blank line; false at end of stream.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return true;
    }
    return false;
}

std::vector<uint64_t> parse_numbers(const std::string& line, const std::string& context) {
    std::istringstream ss(line);
    std::vector<uint64_t> out;
    std::string token;
    while (ss >> token) {
        try {
            size_t used = 0;
            uint64_t value = std::stoull(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(context + ": invalid number '" + token + "'");
        }
    }
    return out;
}

struct GraphBody {
    uint32_t r = 0;
    uint32_t n = 0;
    std::vector<std::vector<VertexId>> edges;
    std::optional<std::vector<uint32_t>> parts;
    std::optional<std::vector<uint64_t>> sources;  // only in reduced dumps
};

GraphBody read_graph_body(std::istream& in, bool allow_sources) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing header line 'r n m'");
    auto header = parse_numbers(line, "header");
    if (header.size() != 3) throw ParseError("header must be 'r n m'");

    if (header[0] == 0 || header[0] > 4096) throw ParseError("uniformity out of range");
    if (header[1] > std::numeric_limits<uint32_t>::max()) throw ParseError("vertex count out of range");
    if (header[2] > std::numeric_limits<uint32_t>::max()) throw ParseError("edge count out of range");

    GraphBody body;
    body.r = static_cast<uint32_t>(header[0]);
    body.n = static_cast<uint32_t>(header[1]);
    uint64_t m = header[2];

    body.edges.reserve(m);
    for (uint64_t i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("edge " + std::to_string(i) + ": unexpected end of file");
        auto ids = parse_numbers(line, "edge " + std::to_string(i));
        if (ids.size() != body.r) {
            throw ParseError("edge " + std::to_string(i) + ": expected " + std::to_string(body.r) +
                             " vertex ids, got " + std::to_string(ids.size()));
        }
        std::vector<VertexId> edge(ids.size());
        for (size_t j = 0; j < ids.size(); ++j) {
            if (ids[j] >= body.n) {
                throw ParseError("edge " + std::to_string(i) + ": vertex id " +
                                 std::to_string(ids[j]) + " out of range");
            }
            if (j > 0 && ids[j] <= ids[j - 1]) {
                throw ParseError("edge " + std::to_string(i) + ": vertex ids must be strictly ascending");
            }
            edge[j] = static_cast<VertexId>(ids[j]);
        }
        body.edges.push_back(std::move(edge));
    }

    while (next_line(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        std::string rest;
        std::getline(ss, rest);
        if (tag == "parts") {
            auto ids = parse_numbers(rest, "parts");
            if (ids.size() != body.n) {
                throw ParseError("parts: expected " + std::to_string(body.n) + " entries, got " +
                                 std::to_string(ids.size()));
            }
            std::vector<uint32_t> parts(ids.begin(), ids.end());
            body.parts = std::move(parts);
        } else if (allow_sources && tag == "sources") {
            auto ids = parse_numbers(rest, "sources");
            if (ids.size() != body.edges.size()) {
                throw ParseError("sources: expected " + std::to_string(body.edges.size()) +
                                 " entries, got " + std::to_string(ids.size()));
            }
            body.sources = std::move(ids);
        } else {
            throw ParseError("unexpected trailing line '" + line + "'");
        }
    }
    return body;
}

void write_graph_lines(uint32_t r, uint32_t n, size_t m, std::ostream& out) {
    out << r << ' ' << n << ' ' << m << '\n';
}

void write_edge_line(std::span<const VertexId> edge, std::ostream& out) {
    for (size_t j = 0; j < edge.size(); ++j) {
        if (j) out << ' ';
        out << edge[j];
    }
    out << '\n';
}

void write_parts_line(const std::vector<uint32_t>& parts, std::ostream& out) {
    out << "parts";
    for (uint32_t part : parts) out << ' ' << part;
    out << '\n';
}

template <typename T>
T open_and_read(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return reader(in);
}

void open_and_write(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    writer(out);
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    auto body = read_graph_body(in, false);
    try {
        return Hypergraph(body.r, body.n, std::move(body.edges), std::move(body.parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    return open_and_read(path, read_hypergraph);
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
    write_graph_lines(h.uniformity(), h.vertex_count(), h.edge_count(), out);
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) write_edge_line(h.edge(i), out);
    if (h.partite_layout()) write_parts_line(*h.partite_layout(), out);
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
    open_and_write(path, [&](std::ostream& out) { write_hypergraph(h, out); });
}

ReducedGraph read_reduced(std::istream& in) {
    auto body = read_graph_body(in, true);
    if (!body.sources) throw ParseError("reduced graph dump is missing the 'sources' line");
    std::vector<ReducedInstance> instances;
    instances.reserve(body.edges.size());
    for (size_t i = 0; i < body.edges.size(); ++i) {
        instances.push_back(ReducedInstance{std::move(body.edges[i]),
                                            static_cast<EdgeIndex>((*body.sources)[i])});
    }
    return ReducedGraph(body.r, body.n, std::move(instances));
}

ReducedGraph read_reduced_file(const std::string& path) { return open_and_read(path, read_reduced); }

void write_reduced(const ReducedGraph& g, std::ostream& out) {
    write_graph_lines(g.uniformity(), g.vertex_count(), g.instances().size(), out);
    for (const auto& inst : g.instances()) {
        write_edge_line(std::span<const VertexId>(inst.m_set.data(), inst.m_set.size()), out);
    }
    out << "sources";
    for (const auto& inst : g.instances()) out << ' ' << inst.source_edge;
    out << '\n';
}

void write_reduced_file(const ReducedGraph& g, const std::string& path) {
    open_and_write(path, [&](std::ostream& out) { write_reduced(g, out); });
}

void write_poly(const MultiPoly& f, std::ostream& out) {
    out << f.modulus << ' ' << f.nvars() << ' ' << f.degree() << '\n';
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        out << f.coeffs[i];
        out << ((i + 1) % 32 == 0 || i + 1 == f.coeffs.size() ? '\n' : ' ');
    }
}

MultiPoly read_poly(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing polynomial header line 'p nvars d'");
    auto header = parse_numbers(line, "poly header");
    if (header.size() != 3) throw ParseError("polynomial header must be 'p nvars d'");
    uint64_t p = header[0];
    uint32_t nvars = static_cast<uint32_t>(header[1]);
    uint32_t degree = static_cast<uint32_t>(header[2]);
    try {
        require_prime_modulus(p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    auto basis = std::make_shared<const MonomialBasis>(nvars, degree);
    std::vector<uint64_t> coeffs;
    coeffs.reserve(basis->size());
    while (coeffs.size() < basis->size()) {
        if (!next_line(in, line)) throw ParseError("polynomial dump ended before all coefficients");
        for (uint64_t value : parse_numbers(line, "poly coefficients")) {
            if (coeffs.size() == basis->size()) throw ParseError("polynomial dump has extra coefficients");
            if (value >= p) throw ParseError("coefficient " + std::to_string(value) + " not reduced mod p");
            coeffs.push_back(value);
        }
    }
    return MultiPoly{std::move(basis), p, std::move(coeffs)};
}

std::vector<MultiPoly> read_polys(std::istream& in) {
    std::vector<MultiPoly> out;
    // Peek for another header by trying to read; read_poly throws on a truly
    // empty stream, so probe manually.
    for (;;) {
        std::streampos pos = in.tellg();
        std::string line;
        if (!next_line(in, line)) break;
        in.seekg(pos);
        out.push_back(read_poly(in));
    }
    return out;
}

}  // namespace berge
