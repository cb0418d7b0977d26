#include "berge/gf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace berge {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

uint64_t binomial(uint64_t a, uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    uint64_t result = 1;
    for (uint64_t i = 1; i <= b; ++i) {
        uint64_t factor = a - b + i;
        // result * factor / i is exact at every step; guard the product.
        if (result > std::numeric_limits<uint64_t>::max() / factor) {
            throw std::overflow_error("binomial coefficient exceeds uint64");
        }
        result = result * factor / i;
    }
    return result;
}

uint64_t checked_pow(uint64_t base, uint32_t exp) {
    uint64_t result = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<uint64_t>::max() / base) {
            throw std::overflow_error("integer power exceeds uint64");
        }
        result *= base;
    }
    return result;
}

void require_prime_modulus(uint64_t p) {
    if (p > kMaxModulus) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds supported maximum " +
                                    std::to_string(kMaxModulus));
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
}

namespace gf {

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t result = 1 % p;
    uint64_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return result;
}

uint64_t inv(uint64_t a, uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    int64_t t = 0, t_new = 1;
    int64_t r = static_cast<int64_t>(p), r_new = static_cast<int64_t>(a);
    while (r_new != 0) {
        int64_t quot = r / r_new;
        int64_t tmp = t - quot * t_new;
        t = t_new;
        t_new = tmp;
        tmp = r - quot * r_new;
        r = r_new;
        r_new = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

}  // namespace gf

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
    if (a.modulus != b.modulus) {
        throw std::invalid_argument("field element modulus mismatch: " + std::to_string(a.modulus) +
                                    " vs " + std::to_string(b.modulus));
    }
}

}  // namespace

FieldElement field_element(uint64_t value, uint64_t p) {
    require_prime_modulus(p);
    return FieldElement{value % p, p};
}

FieldElement add(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return {gf::add(a.value, b.value, a.modulus), a.modulus};
}

FieldElement sub(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return {gf::sub(a.value, b.value, a.modulus), a.modulus};
}

FieldElement mul(FieldElement a, FieldElement b) {
    require_same_modulus(a, b);
    return {gf::mul(a.value, b.value, a.modulus), a.modulus};
}

FieldElement neg(FieldElement a) { return {gf::neg(a.value, a.modulus), a.modulus}; }

FieldElement inv(FieldElement a) { return {gf::inv(a.value, a.modulus), a.modulus}; }

FieldElement pow(FieldElement a, uint64_t e) { return {gf::pow(a.value, e, a.modulus), a.modulus}; }

}  // namespace berge
