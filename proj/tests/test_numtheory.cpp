#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>

#include "hspsim/errors.hpp"
#include "hspsim/numtheory.hpp"

using namespace hspsim;

namespace {

// Independent O(n) oracle: order of a mod n by multiplying one step at a time.
std::int64_t naive_order(std::int64_t a, std::int64_t n) {
    std::int64_t acc = a % n;
    for (std::int64_t r = 1;; ++r) {
        if (acc == 1) return r;
        acc = acc * a % n;
    }
}

std::int64_t naive_phi(std::int64_t r) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= r; ++k)
        if (std::gcd(k, r) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("gcd on fixed anchors") {
    CHECK(gcd(15, 48) == 3);
    CHECK(gcd(15, 50) == 5);
    CHECK(gcd(12, 0) == 12);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(1, 1) == 1);
    CHECK(gcd(360, 336) == 24);
}

TEST_CASE("gcd agrees with std::gcd on a sweep") {
    for (std::int64_t a = 0; a <= 120; ++a)
        for (std::int64_t b = (a == 0 ? 1 : 0); b <= 120; ++b)
            CHECK(gcd(a, b) == std::gcd(a, b));
}

TEST_CASE("extended gcd returns a Bezout identity") {
    for (std::int64_t a = 0; a <= 80; ++a) {
        for (std::int64_t b = (a == 0 ? 1 : 0); b <= 80; ++b) {
            const Bezout bz = extended_gcd(a, b);
            CHECK(bz.g == std::gcd(a, b));
            CHECK(a * bz.s + b * bz.t == bz.g);
        }
    }
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(3, 5) == 2);
    CHECK(mod_inverse(7, 15) == 13);  // 7*13 = 91 = 6*15+1
    CHECK(mod_inverse(1, 2) == 1);
    CHECK_THROWS_AS(mod_inverse(3, 6), NotInvertible);
    CHECK_THROWS_AS(mod_inverse(0, 5), NotInvertible);
    for (std::int64_t m = 2; m <= 60; ++m) {
        for (std::int64_t x = 1; x < m; ++x) {
            if (std::gcd(x, m) != 1) {
                CHECK_THROWS_AS(mod_inverse(x, m), NotInvertible);
            } else {
                const std::int64_t inv = mod_inverse(x, m);
                CHECK(inv >= 0);
                CHECK(inv < m);
                CHECK(x * inv % m == 1);
            }
        }
    }
}

TEST_CASE("modular exponentiation") {
    CHECK(mod_exp(7, 4, 15) == 1);
    CHECK(mod_exp(7, 0, 15) == 1);
    CHECK(mod_exp(7, 1, 15) == 7);
    CHECK(mod_exp(2, 10, 1000) == 24);
    CHECK(mod_exp(0, 5, 7) == 0);
    // Against iterated multiplication.
    for (std::int64_t m = 2; m <= 40; ++m) {
        for (std::int64_t a = 0; a < m; ++a) {
            std::int64_t acc = 1 % m;
            for (std::uint64_t e = 0; e <= 12; ++e) {
                CHECK(mod_exp(a, e, m) == acc);
                acc = acc * a % m;
            }
        }
    }
    // Large exponent sanity: Fermat on a prime.
    CHECK(mod_exp(3, 1000003 - 1, 1000003) == 1);
}

TEST_CASE("multiplicative order on fixed anchors") {
    const OrderResult r = multiplicative_order(7, 15);
    CHECK(r.base == 7);
    CHECK(r.modulus == 15);
    CHECK(r.order == 4);
    CHECK(multiplicative_order(2, 15).order == 4);
    CHECK(multiplicative_order(4, 15).order == 2);
    CHECK(multiplicative_order(14, 15).order == 2);
    CHECK(multiplicative_order(2, 21).order == 6);
    CHECK(multiplicative_order(1, 9).order == 1);
    CHECK_THROWS_AS(multiplicative_order(6, 15), NotCoprime);
    CHECK_THROWS_AS(multiplicative_order(0, 4), NotCoprime);
}

TEST_CASE("multiplicative order matches the naive oracle and divides phi") {
    for (std::int64_t n = 2; n <= 150; ++n) {
        const std::int64_t phi = naive_phi(n);
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            const std::int64_t r = multiplicative_order(a, n).order;
            CHECK(r == naive_order(a, n));
            CHECK(phi % r == 0);
        }
    }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(16) == 8);
    CHECK(euler_phi(17) == 16);
    for (std::int64_t r = 1; r <= 200; ++r) CHECK(euler_phi(r) == naive_phi(r));
}

TEST_CASE("convergents on fixed anchors") {
    SUBCASE("zero numerator") {
        const auto cs = convergents(0, 256);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].numerator == 0);
        CHECK(cs[0].denominator == 1);
    }
    SUBCASE("192/256 ends at 3/4") {
        const auto cs = convergents(192, 256);
        REQUIRE(!cs.empty());
        CHECK(cs.back().numerator == 3);
        CHECK(cs.back().denominator == 4);
    }
    SUBCASE("85/256 passes through denominator 3") {
        // 85/256 is within 1/(2*3^2) of 1/3, so 1/3 must appear.
        const auto cs = convergents(85, 256);
        bool found = false;
        for (const Convergent& c : cs)
            if (c.numerator == 1 && c.denominator == 3) found = true;
        CHECK(found);
        CHECK(cs.back().numerator == 85);
        CHECK(cs.back().denominator == 256);
    }
}

TEST_CASE("convergents: lowest terms, increasing denominators, exact tail") {
    for (std::int64_t q : {7, 12, 64, 100, 256, 243, 1024}) {
        for (std::int64_t c = 0; c < q; ++c) {
            const auto cs = convergents(c, q);
            REQUIRE(!cs.empty());
            std::int64_t prev_den = 0;
            for (const Convergent& conv : cs) {
                CHECK(conv.denominator > prev_den);
                prev_den = conv.denominator;
                CHECK(std::gcd(conv.numerator, conv.denominator) == 1);
            }
            const std::int64_t g = std::gcd(c, q);
            CHECK(cs.back().numerator == c / (g == 0 ? 1 : g));
            CHECK(cs.back().denominator == (c == 0 ? 1 : q / g));
        }
    }
}

TEST_CASE("non-final convergents approximate to better than 1/d^2") {
    for (std::int64_t q : {64, 256, 625}) {
        for (std::int64_t c = 1; c < q; ++c) {
            const auto cs = convergents(c, q);
            for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
                // |c/q - p/d| < 1/d^2  <=>  |c*d - p*q| * d < q
                const std::int64_t num = cs[i].numerator, den = cs[i].denominator;
                const std::int64_t err = c * den - num * q;
                CHECK((err < 0 ? -err : err) * den < q);
            }
        }
    }
}

TEST_CASE("primality and trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(17));
    CHECK(is_prime(1000003));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(15));
    CHECK(!is_prime(1024));
    for (std::int64_t n = 2; n <= 500; ++n) {
        bool composite = false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) composite = true;
        CHECK(is_prime(n) == !composite);
        const auto f = trial_division_factor(n);
        if (composite) {
            REQUIRE(f.has_value());
            CHECK(*f > 1);
            CHECK(*f < n);
            CHECK(n % *f == 0);
        } else {
            CHECK(!f.has_value());
        }
    }
}

TEST_CASE("find_generator on fixed anchors") {
    CHECK(find_generator(2) == 1);
    CHECK(find_generator(3) == 2);
    CHECK(find_generator(5) == 2);
    CHECK(find_generator(7) == 3);
    CHECK(find_generator(11) == 2);
    CHECK(find_generator(23) == 5);
    CHECK_THROWS_AS(find_generator(15), NotPrime);
    CHECK_THROWS_AS(find_generator(1), NotPrime);
}

TEST_CASE("find_generator returns an element of full order") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101}) {
        const std::int64_t g = find_generator(p);
        CHECK(naive_order(g, p) == p - 1);
        // Least such element: everything smaller has smaller order.
        for (std::int64_t a = 1; a < g; ++a) CHECK(naive_order(a, p) < p - 1);
    }
}

TEST_CASE("perfect power detection") {
    CHECK(perfect_power_root(4) == 2);
    CHECK(perfect_power_root(8) == 2);
    CHECK(perfect_power_root(27) == 3);
    // 81 and 1024 admit several roots (3^4 = 9^2, 2^10 = 4^5 = 32^2); any is fine.
    {
        const auto r81 = perfect_power_root(81);
        REQUIRE(r81.has_value());
        CHECK((*r81 == 3 || *r81 == 9));
        const auto r1024 = perfect_power_root(1024);
        REQUIRE(r1024.has_value());
        CHECK((*r1024 == 2 || *r1024 == 4 || *r1024 == 32));
    }
    CHECK(!perfect_power_root(6).has_value());
    CHECK(!perfect_power_root(15).has_value());
    CHECK(!perfect_power_root(2).has_value());
    for (std::int64_t n = 2; n <= 2000; ++n) {
        bool is_power = false;
        for (std::int64_t m = 2; m * m <= n; ++m) {
            std::int64_t v = m * m;
            while (v < n) v *= m;
            if (v == n) is_power = true;
        }
        CHECK(perfect_power_root(n).has_value() == is_power);
        if (const auto root = perfect_power_root(n)) {
            std::int64_t v = *root;
            while (v < n) v *= *root;
            CHECK(v == n);
        }
    }
}
