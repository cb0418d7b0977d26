#include "berge/gf.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace berge;

TEST_CASE("prime detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(!is_prime(4));
    CHECK(!is_prime(7917));
    CHECK_THROWS_AS(require_prime_modulus(4), std::invalid_argument);
    CHECK_THROWS_AS(field_element(1, 6), std::invalid_argument);
}

TEST_CASE("field element basics") {
    auto a = field_element(3, 5);
    auto b = field_element(4, 5);
    CHECK(add(a, b).value == 2);
    CHECK(mul(field_element(2, 5), field_element(3, 5)).value == 1);
    CHECK(neg(field_element(0, 7)).value == 0);
    CHECK(neg(field_element(2, 7)).value == 5);
    CHECK(sub(field_element(1, 7), field_element(3, 7)).value == 5);

    CHECK_THROWS_AS(add(field_element(1, 5), field_element(1, 7)), std::invalid_argument);
    CHECK_THROWS_AS(inv(field_element(0, 5)), std::domain_error);
}

TEST_CASE("inverse examples and exhaustive check at p=11") {
    CHECK(inv(field_element(2, 5)).value == 3);
    CHECK(inv(field_element(1, 7)).value == 1);
    for (uint64_t a = 1; a < 11; ++a) {
        auto x = field_element(a, 11);
        CHECK(mul(x, inv(x)).value == 1);
    }
}

TEST_CASE("pow examples and agreement with repeated multiplication at p=13") {
    CHECK(pow(field_element(2, 5), 4).value == 1);
    CHECK(pow(field_element(0, 5), 0).value == 1);
    for (uint64_t a = 0; a < 13; ++a) {
        uint64_t acc = 1;
        for (uint64_t e = 0; e <= 12; ++e) {
            CHECK(pow(field_element(a, 13), e).value == acc);
            acc = acc * a % 13;
        }
    }
}

TEST_CASE("field axioms on exhaustive small primes") {
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (uint64_t a = 0; a < p; ++a) {
            auto fa = field_element(a, p);
            CHECK(add(fa, neg(fa)).value == 0);
            if (a != 0) CHECK(mul(fa, inv(fa)).value == 1);
            for (uint64_t b = 0; b < p; ++b) {
                auto fb = field_element(b, p);
                CHECK(add(fa, fb) == add(fb, fa));
                CHECK(mul(fa, fb) == mul(fb, fa));
                for (uint64_t c = 0; c < p; ++c) {
                    auto fc = field_element(c, p);
                    CHECK(add(add(fa, fb), fc) == add(fa, add(fb, fc)));
                    CHECK(mul(mul(fa, fb), fc) == mul(fa, mul(fb, fc)));
                    CHECK(mul(fa, add(fb, fc)) == add(mul(fa, fb), mul(fa, fc)));
                }
            }
        }
    }
}

TEST_CASE("binomial with the a < b convention") {
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(4, 1) == 4);
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(16, 10) == 8008);
    CHECK(binomial(5, 0) == 1);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("checked integer power") {
    CHECK(checked_pow(3, 6) == 729);
    CHECK(checked_pow(7, 0) == 1);
    CHECK(checked_pow(0, 3) == 0);
    CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
}
