#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/poly.hpp"
#include "berge/reduction.hpp"

namespace berge {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format, LF line endings, `#` starts a comment line:
//   r n m
//   <r ascending vertex ids per edge, m lines>
//   parts <n part ids>            (only when a partite layout exists)
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(const Hypergraph& h, std::ostream& out);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

// Same layout as the hypergraph format plus one trailing line
//   sources <source edge index per instance>
ReducedGraph read_reduced(std::istream& in);
ReducedGraph read_reduced_file(const std::string& path);
void write_reduced(const ReducedGraph& g, std::ostream& out);
void write_reduced_file(const ReducedGraph& g, const std::string& path);

// Polynomial dump: header line `p nvars d`, then the coefficients in the
// canonical monomial order, whitespace separated. Several dumps may be
// concatenated in one stream.
void write_poly(const MultiPoly& f, std::ostream& out);
MultiPoly read_poly(std::istream& in);
std::vector<MultiPoly> read_polys(std::istream& in);

}  // namespace berge
