#include "hspsim/numtheory.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace hspsim {

using int128 = __int128;

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw RangeError("gcd: inputs must be nonnegative");
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    if (m < 2) throw RangeError("mod_inverse: modulus must be >= 2");
    std::int64_t xr = ((x % m) + m) % m;
    Bezout b = extended_gcd(xr, m);
    if (b.g != 1)
        throw NotInvertible(std::to_string(x) + " has no inverse modulo " + std::to_string(m));
    return ((b.s % m) + m) % m;
}

std::int64_t mod_exp(std::int64_t a, std::uint64_t e, std::int64_t m) {
    if (m < 2) throw RangeError("mod_exp: modulus must be >= 2");
    std::int64_t base = ((a % m) + m) % m;
    std::int64_t acc = 1 % m;
    while (e != 0) {
        if (e & 1) acc = std::int64_t(int128(acc) * base % m);
        base = std::int64_t(int128(base) * base % m);
        e >>= 1;
    }
    return acc;
}

OrderResult multiplicative_order(std::int64_t a, std::int64_t n) {
    if (n < 2) throw RangeError("multiplicative_order: modulus must be >= 2");
    std::int64_t ar = ((a % n) + n) % n;
    if (gcd(ar, n) != 1)
        throw NotCoprime(std::to_string(a) + " is not coprime to " + std::to_string(n) +
                         "; no power of it is 1 mod " + std::to_string(n));
    std::int64_t acc = ar % n;
    std::int64_t r = 1;
    while (acc != 1 % n) {
        acc = std::int64_t(int128(acc) * ar % n);
        ++r;
        if (r > n) throw Error("multiplicative_order: enumeration did not terminate");
    }
    return {a, n, r};
}

std::vector<Convergent> convergents(std::int64_t c, std::int64_t q) {
    if (q <= 0 || c < 0 || c >= q)
        throw RangeError("convergents: require 0 <= c < q");
    std::vector<Convergent> out;
    // h_{-1}=1, h_{-2}=0 (numerators); k_{-1}=0, k_{-2}=1 (denominators).
    std::int64_t hm1 = 1, hm2 = 0, km1 = 0, km2 = 1;
    std::int64_t x = c, y = q;
    while (true) {
        std::int64_t a = x / y, rem = x % y;
        std::int64_t h = a * hm1 + hm2;
        std::int64_t k = a * km1 + km2;
        if (!out.empty() && out.back().denominator == k)
            out.back() = {h, k};  // 1/1 supersedes 0/1
        else
            out.push_back({h, k});
        hm2 = hm1;
        hm1 = h;
        km2 = km1;
        km1 = k;
        if (rem == 0) break;
        x = y;
        y = rem;
    }
    return out;
}

std::int64_t euler_phi(std::int64_t r) {
    if (r < 1) throw RangeError("euler_phi: argument must be >= 1");
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= r; ++k)
        if (gcd(k, r) == 1) ++count;
    return count;
}

std::int64_t find_generator(std::int64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    for (std::int64_t g = 2; g < p; ++g)
        if (multiplicative_order(g, p).order == p - 1) return g;
    throw Error("find_generator: no generator found (unreachable for prime p)");
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::int64_t> trial_division_factor(std::int64_t n) {
    if (n < 2) throw RangeError("trial_division_factor: argument must be >= 2");
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return std::nullopt;
}

std::optional<std::int64_t> perfect_power_root(std::int64_t n) {
    if (n < 4) return std::nullopt;
    for (int k = 2; (std::int64_t(1) << k) <= n; ++k) {
        // Integer k-th root by binary search.
        std::int64_t lo = 2, hi = n;
        while (lo <= hi) {
            std::int64_t mid = lo + (hi - lo) / 2;
            int128 pw = 1;
            bool over = false;
            for (int i = 0; i < k; ++i) {
                pw *= mid;
                if (pw > n) {
                    over = true;
                    break;
                }
            }
            if (!over && pw == n) return mid;
            if (over || pw > n)
                hi = mid - 1;
            else
                lo = mid + 1;
        }
    }
    return std::nullopt;
}

}  // namespace hspsim
