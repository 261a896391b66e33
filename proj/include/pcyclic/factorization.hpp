#pragma once

// Integer factorization support: trial division up to 10^6 followed by
// Brent-cycle Pollard rho.  Group orders p^m - 1 at the sizes this library
// targets (<= ~10^12) factor instantly with this combination.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace pcyclic {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    // Fixed generator seed keeps the witness sequence (and thus the whole
    // factorization pipeline) deterministic run to run.
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

// A nonnegative integer together with its complete prime factorization.
struct FactoredInteger {
    BigInt value;
    std::map<BigInt, unsigned> factors;  // prime -> exponent

    bool consistent() const {
        BigInt prod = 1;
        for (const auto& [q, e] : factors) {
            for (unsigned i = 0; i < e; ++i) prod *= q;
        }
        return prod == value;
    }
};

namespace detail {

inline BigInt pollard_rho(const BigInt& n, std::uint64_t seed) {
    // Brent's cycle-finding variant; n must be odd composite.
    std::mt19937_64 gen(seed);
    while (true) {
        BigInt c = BigInt(gen() % 1000000) + 1;
        BigInt x = BigInt(gen() % 1000000) + 2;
        BigInt y = x, d = 1;
        int power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // closed cycle, retry with a fresh c
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n, static_cast<std::uint64_t>(n % 0xffffffffULL));
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

inline FactoredInteger factor_integer(BigInt n) {
    if (n < 1) throw std::invalid_argument("factor_integer: n must be >= 1");
    FactoredInteger result;
    result.value = n;
    for (BigInt q = 2; q <= 1000000 && q * q <= n; q == 2 ? q = 3 : q += 2) {
        while (n % q == 0) {
            ++result.factors[q];
            n /= q;
        }
    }
    if (n > 1) detail::factor_into(n, result.factors);
    return result;
}

}  // namespace pcyclic
