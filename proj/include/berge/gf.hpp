#pragma once

#include <cstdint>

namespace berge {

// Largest supported modulus. Keeping moduli below 2^31 lets every product of
// two reduced values fit in uint64_t without 128-bit arithmetic.
inline constexpr uint64_t kMaxModulus = (1ull << 31) - 1;

bool is_prime(uint64_t n);

// Throws std::invalid_argument unless p is a prime within range.
void require_prime_modulus(uint64_t p);

// Exact binomial coefficient with the C(a,b) = 0 for a < b convention.
// Throws std::overflow_error when the value exceeds uint64.
uint64_t binomial(uint64_t a, uint64_t b);

// base^exp with an overflow check.
uint64_t checked_pow(uint64_t base, uint32_t exp);

// Unchecked modular kernels; operands must already be reduced mod p.
namespace gf {

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t neg(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

// a^e by square-and-multiply; a^0 = 1 for every a, including 0.
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);

// Multiplicative inverse; throws std::domain_error when a == 0.
uint64_t inv(uint64_t a, uint64_t p);

}  // namespace gf

/// Field value together with its modulus. Mixed-modulus operations are
/// rejected; construction via field_element checks primality.
struct FieldElement {
    uint64_t value = 0;
    uint64_t modulus = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement field_element(uint64_t value, uint64_t p);
FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, uint64_t e);

}  // namespace berge
