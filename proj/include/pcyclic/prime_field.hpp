#pragma once

// Exact arithmetic in GF(p) for an odd prime p, and in the polynomial ring
// GF(p)[x]: dense polynomials stored lowest-degree-first, division with
// remainder, irreducibility (Rabin's test) and primitivity testing.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcyclic/factorization.hpp"

namespace pcyclic {

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    base %= mod;
    if (base < 0) base += mod;
    std::int64_t result = 1 % mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::int64_t>(__int128(result) * base % mod);
        base = static_cast<std::int64_t>(__int128(base) * base % mod);
        exp >>= 1;
    }
    return result;
}

// Solves a*x + b*y = gcd(a,b); returns {gcd, x, y}.
struct EgcdResult {
    std::int64_t g, x, y;
};

inline EgcdResult extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    return is_probable_prime(BigInt(n));
}

// The prime field GF(p), p an odd prime.  All element values are residues
// in [0, p).
struct PrimeField {
    std::int64_t p;

    explicit PrimeField(std::int64_t p_) : p(p_) {
        if (p < 3 || !is_prime_i64(p))
            throw std::invalid_argument("PrimeField: p must be an odd prime >= 3");
    }

    std::int64_t reduce(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(__int128(a) * b % p);
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p - a; }
    std::int64_t inv(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
        auto e = extended_gcd(a, p);
        return reduce(e.x);
    }
    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        if (e < 0) return mod_pow(inv(a), -e, p);
        return mod_pow(a, e, p);
    }
};

// Dense polynomial over GF(p), coefficients lowest-degree-first with no
// trailing zeros.  The zero polynomial has an empty coefficient vector and
// its degree is reported as std::nullopt rather than any integer sentinel.
class Poly {
  public:
    Poly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) {
            x %= p_;
            if (x < 0) x += p_;
        }
        trim();
    }

    static Poly zero(std::int64_t p) { return Poly(p, {}); }
    static Poly one(std::int64_t p) { return Poly(p, {1}); }
    static Poly x(std::int64_t p) { return Poly(p, {0, 1}); }
    static Poly monomial(std::int64_t p, std::size_t deg, std::int64_t coeff = 1) {
        std::vector<std::int64_t> c(deg + 1, 0);
        c[deg] = coeff;
        return Poly(p, std::move(c));
    }

    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    std::size_t degree_or_throw() const {
        if (c_.empty()) throw std::domain_error("Poly: degree of zero polynomial");
        return c_.size() - 1;
    }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Lexicographic order on (c_0, ..., c_deg), shorter vectors first.
    // Used for the canonical-modulus choice and witness tie-breaking.
    bool lex_less(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
    }

    Poly operator+(const Poly& o) const {
        check_same(o);
        PrimeField F(p_);
        std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
        return Poly(p_, std::move(r));
    }

    Poly operator-(const Poly& o) const {
        check_same(o);
        PrimeField F(p_);
        std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
        return Poly(p_, std::move(r));
    }

    Poly operator*(const Poly& o) const {
        check_same(o);
        if (is_zero() || o.is_zero()) return zero(p_);
        std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                r[i + j] = static_cast<std::int64_t>(
                    (__int128(c_[i]) * o.c_[j] + r[i + j]) % p_);
            }
        }
        return Poly(p_, std::move(r));
    }

    Poly scaled(std::int64_t k) const {
        PrimeField F(p_);
        k = F.reduce(k);
        std::vector<std::int64_t> r(c_);
        for (auto& x : r) x = F.mul(x, k);
        return Poly(p_, std::move(r));
    }

    std::int64_t eval(std::int64_t x0) const {
        PrimeField F(p_);
        std::int64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F.add(F.mul(acc, x0), *it);
        return acc;
    }

    // Comma-separated coefficients, lowest degree first: "4,0,2,2,0,3,1".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        return os.str();
    }

    static Poly from_string(std::int64_t p, const std::string& s) {
        std::vector<std::int64_t> c;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            c.push_back(std::stoll(tok));
        }
        return Poly(p, std::move(c));
    }

    // Human form, highest degree first: "x^6 + 3x^5 + 2x^3 + 2x^2 + 4".
    std::string pretty() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << c_[k];
            } else {
                if (c_[k] != 1) os << c_[k];
                os << "x";
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same(const Poly& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Poly: modulus mismatch");
    }

    std::int64_t p_;
    std::vector<std::int64_t> c_;
};

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("poly_divmod: modulus mismatch");
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const std::int64_t p = a.modulus();
    PrimeField F(p);
    if (a.is_zero() || a.degree_or_throw() < b.degree_or_throw())
        return {Poly::zero(p), a};
    std::vector<std::int64_t> rem(a.coeffs());
    const std::size_t db = b.degree_or_throw();
    std::vector<std::int64_t> quot(rem.size() - db, 0);
    const std::int64_t lead_inv = F.inv(b.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        std::int64_t q = F.mul(rem[i], lead_inv);
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, b.coeff(j)));
    }
    return {Poly(p, std::move(quot)), Poly(p, std::move(rem))};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(PrimeField(a.modulus()).inv(a.leading()));
    return a;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod) {
    return poly_mod(a * b, mod);
}

// base^e reduced mod `mod`; e is an arbitrary-precision nonnegative exponent.
inline Poly poly_pow_mod(Poly base, BigInt e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("poly_pow_mod: negative exponent");
    Poly result = Poly::one(base.modulus());
    base = poly_mod(base, mod);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) result = poly_mul_mod(result, base, mod);
        base = poly_mul_mod(base, base, mod);
        e >>= 1;
    }
    return result;
}

// Rabin irreducibility: f (monic, deg d >= 1) is irreducible over GF(p) iff
// x^(p^d) == x (mod f) and gcd(x^(p^(d/q)) - x, f) = 1 for every prime q | d.
inline bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree_or_throw() < 1)
        throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
    const std::int64_t p = f.modulus();
    const std::size_t d = f.degree_or_throw();
    if (d == 1) return true;

    auto frobenius_power = [&](std::size_t k) {
        // x^(p^k) mod f via k successive p-th powers
        Poly t = Poly::x(p);
        for (std::size_t i = 0; i < k; ++i) t = poly_pow_mod(t, BigInt(p), f);
        return t;
    };

    auto df = factor_integer(BigInt(d));
    for (const auto& [q, mult] : df.factors) {
        (void)mult;
        std::size_t sub = d / static_cast<std::size_t>(q);
        Poly t = frobenius_power(sub) - Poly::x(p);
        if (t.is_zero()) return false;  // f would split over the subfield of degree sub
        if (poly_gcd(t, f) != Poly::one(p)) return false;
    }
    return frobenius_power(d) == Poly::x(p);
}

// f irreducible of degree m is primitive iff x has order p^m - 1 in
// GF(p)[x]/(f): x^((p^m-1)/q) != 1 for every prime q | p^m - 1.
inline bool is_primitive(const Poly& f, const FactoredInteger& group_order) {
    if (!is_irreducible(f)) throw std::invalid_argument("is_primitive: polynomial is reducible");
    const std::int64_t p = f.modulus();
    const BigInt order = group_order.value;
    const Poly one = Poly::one(p);
    for (const auto& [q, mult] : group_order.factors) {
        (void)mult;
        if (poly_pow_mod(Poly::x(p), order / q, f) == one) return false;
    }
    return true;
}

}  // namespace pcyclic
