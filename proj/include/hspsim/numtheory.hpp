// Exact integer arithmetic used both inside the solvers and as independent
// classical ground truth in the tests. Inputs are desk scale (moduli below
// 2^20); products go through 128-bit intermediates so nothing overflows.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hspsim/errors.hpp"

namespace hspsim {

// Greatest common divisor of nonnegative a, b (not both zero), by repeated
// division with remainder.
std::int64_t gcd(std::int64_t a, std::int64_t b);

struct Bezout {
    std::int64_t g;  // gcd(a, b), nonnegative
    std::int64_t s;  // coefficients with a*s + b*t == g
    std::int64_t t;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

// Inverse of x modulo m (m >= 2); throws NotInvertible when gcd(x, m) != 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);

// a^e mod m by square-and-multiply, O(log e) multiplications.
std::int64_t mod_exp(std::int64_t a, std::uint64_t e, std::int64_t m);

struct OrderResult {
    std::int64_t base;
    std::int64_t modulus;
    std::int64_t order;  // least r >= 1 with base^r == 1 (mod modulus)
};
// Order of a modulo n by direct enumeration of powers (classical ground
// truth; O(n)). Throws NotCoprime when gcd(a, n) != 1.
OrderResult multiplicative_order(std::int64_t a, std::int64_t n);

struct Convergent {
    std::int64_t numerator;
    std::int64_t denominator;
};
// Continued-fraction convergents of c/q, 0 <= c < q. Every entry is in
// lowest terms, denominators strictly increase, and the final entry equals
// c/q reduced. (When the leading 0/1 and 1/1 approximations collide at
// denominator 1, only the later, closer one is kept.)
std::vector<Convergent> convergents(std::int64_t c, std::int64_t q);

// Count of 1 <= k <= r coprime to r.
std::int64_t euler_phi(std::int64_t r);

// Least generator of the multiplicative group mod prime p; NotPrime otherwise.
std::int64_t find_generator(std::int64_t p);

bool is_prime(std::int64_t n);

// Smallest nontrivial divisor of n >= 2, or nullopt when n is prime.
std::optional<std::int64_t> trial_division_factor(std::int64_t n);

// If n == m^k for some m >= 2, k >= 2, returns such an m; otherwise nullopt.
std::optional<std::int64_t> perfect_power_root(std::int64_t n);

}  // namespace hspsim
