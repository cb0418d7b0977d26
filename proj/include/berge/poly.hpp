#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "berge/gf.hpp"
#include "berge/rng.hpp"

namespace berge {

// C(nvars + degree, degree), exact; throws std::overflow_error when the
// count exceeds uint64.
uint64_t monomial_count(uint32_t nvars, uint32_t degree);

/**
 * All monomials in nvars variables of total degree <= degree, in the
 * canonical order used throughout: ascending total degree, and within one
 * degree ascending lexicographic on the exponent tuple (a_0, ..., a_{n-1}).
 * Index 0 is always the constant monomial.
 */
class MonomialBasis {
public:
    MonomialBasis(uint32_t nvars, uint32_t degree);

    uint32_t nvars() const { return nvars_; }
    uint32_t degree() const { return degree_; }
    size_t size() const { return flat_.size() / nvars_; }

    std::span<const uint8_t> exponents(size_t i) const {
        return std::span<const uint8_t>(flat_.data() + i * nvars_, nvars_);
    }

private:
    uint32_t nvars_;
    uint32_t degree_;
    std::vector<uint8_t> flat_;
};

/// Dense multivariate polynomial over F_p: one coefficient per basis
/// monomial, in the basis order.
struct MultiPoly {
    std::shared_ptr<const MonomialBasis> basis;
    uint64_t modulus = 0;
    std::vector<uint64_t> coeffs;

    uint32_t nvars() const { return basis->nvars(); }
    uint32_t degree() const { return basis->degree(); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.modulus == b.modulus && a.nvars() == b.nvars() && a.degree() == b.degree() &&
               a.coeffs == b.coeffs;
    }
};

MultiPoly zero_poly(uint64_t p, uint32_t nvars, uint32_t degree);

// Every coefficient drawn independently and uniformly from F_p; the same
// seed state yields the same polynomial.
MultiPoly sample_uniform(uint64_t p, uint32_t nvars, uint32_t degree, Rng& rng);
MultiPoly sample_uniform(std::shared_ptr<const MonomialBasis> basis, uint64_t p, Rng& rng);

// Value at one point; point size must equal nvars (coordinates are reduced
// mod p). Throws std::invalid_argument on dimension mismatch.
FieldElement evaluate(const MultiPoly& f, std::span<const uint64_t> point);

// Pointwise equal to evaluate; precomputes per-point power tables.
std::vector<FieldElement> evaluate_batch(const MultiPoly& f,
                                         const std::vector<std::vector<uint64_t>>& points);

// Flat layout variant: points.size() == out.size() * nvars, coordinates of
// point i at [i*nvars, (i+1)*nvars). Splits across workers; the output does
// not depend on the worker count.
void evaluate_batch_flat(const MultiPoly& f, std::span<const uint64_t> points,
                         std::span<uint64_t> out, unsigned workers = 1);

// Values of f on all p^nvars points of F_p^nvars, folding one variable at a
// time. out[idx] is the value at the point whose i-th coordinate is
// (idx / p^i) % p. Orders of magnitude faster than per-point evaluation on
// full grids; the output does not depend on the worker count.
void evaluate_grid(const MultiPoly& f, std::span<uint64_t> out, unsigned workers = 1);

}  // namespace berge
