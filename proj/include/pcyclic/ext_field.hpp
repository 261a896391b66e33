#pragma once

// GF(p^m) in polynomial basis over a monic primitive modulus.  Elements are
// packed base-p integers in [0, p^m); the packed value is also the hash key.
// For fields with p^m <= 2^24 the constructor builds discrete-log, antilog
// and Zech-logarithm tables, which back O(1) multiplication and addition in
// the search-heavy callers.  Above that limit all arithmetic falls back to
// polynomial-basis operations.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcyclic/prime_field.hpp"

namespace pcyclic {

class ExtensionField {
  public:
    static constexpr std::int64_t kTableLimit = std::int64_t(1) << 24;
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    static std::shared_ptr<const ExtensionField> make(
        std::int64_t p, std::int64_t m,
        std::optional<Poly> modulus_override = std::nullopt);

    std::int64_t p() const { return p_; }
    std::int64_t m() const { return m_; }
    std::int64_t size() const { return q_; }                 // p^m
    std::int64_t group_order() const { return q_ - 1; }      // |GF(p^m)^*|
    const FactoredInteger& group_order_factored() const { return group_order_factored_; }
    std::int64_t n() const { return n_; }                    // 2(p^m-1)/(p-1)
    const Poly& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }
    const std::vector<std::uint32_t>& zech_table() const { return zech_; }

    // ---- packed-element arithmetic ----------------------------------------

    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }
    std::int64_t from_scalar(std::int64_t c) const {
        c %= p_;
        if (c < 0) c += p_;
        return c;
    }

    std::int64_t pack(const std::vector<std::int64_t>& coeffs) const {
        if (static_cast<std::int64_t>(coeffs.size()) > m_)
            throw std::invalid_argument("ExtensionField::pack: too many coefficients");
        std::int64_t v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            std::int64_t c = coeffs[i] % p_;
            if (c < 0) c += p_;
            v = v * p_ + c;
        }
        return v;
    }

    std::vector<std::int64_t> unpack(std::int64_t a) const {
        std::vector<std::int64_t> c(m_, 0);
        for (std::int64_t i = 0; i < m_ && a; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        if (!zech_.empty()) {
            std::int64_t la = log_[a], lb = log_[b];
            std::int64_t d = lb - la;
            if (d < 0) d += group_order();
            std::uint32_t z = zech_[d];
            if (z == kNoLog) return 0;
            std::int64_t e = la + z;
            if (e >= group_order()) e -= group_order();
            return exp_[e];
        }
        return add_digitwise(a, b);
    }

    std::int64_t add_digitwise(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0, mult = 1;
        for (std::int64_t i = 0; i < m_; ++i) {
            std::int64_t da = a % p_, db = b % p_;
            std::int64_t s = da + db;
            if (s >= p_) s -= p_;
            r += s * mult;
            mult *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }

    std::int64_t neg(std::int64_t a) const {
        if (a == 0) return 0;
        std::int64_t r = 0, mult = 1;
        for (std::int64_t i = 0; i < m_; ++i) {
            std::int64_t d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * mult;
            mult *= p_;
            a /= p_;
        }
        return r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) {
            std::int64_t e = std::int64_t(log_[a]) + log_[b];
            if (e >= group_order()) e -= group_order();
            return exp_[e];
        }
        return mul_polybasis(a, b);
    }

    std::int64_t inv(std::int64_t a) const {
        if (a == 0) throw std::domain_error("ExtensionField::inv: zero element");
        return pow(a, group_order() - 1);
    }

    // a^e with the exponent reduced mod p^m - 1 for nonzero a.
    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) throw std::domain_error("ExtensionField::pow: zero base, negative exponent");
            return e == 0 ? 1 : 0;
        }
        const std::int64_t N = group_order();
        e %= N;
        if (e < 0) e += N;
        if (!exp_.empty()) {
            std::int64_t le = static_cast<std::int64_t>(
                (__int128(log_[a]) * e) % N);
            return exp_[le];
        }
        std::int64_t result = 1, base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    std::int64_t pow_big(std::int64_t a, const BigInt& e) const {
        if (a == 0 && e > 0) return 0;
        BigInt r = e % group_order();
        if (r < 0) r += group_order();
        return pow(a, static_cast<std::int64_t>(r));
    }

    std::int64_t scalar_mul(std::int64_t c, std::int64_t a) const {
        return mul(from_scalar(c), a);
    }

    // discrete log base pi; requires tables
    std::int64_t log(std::int64_t a) const {
        if (a == 0) throw std::domain_error("ExtensionField::log: zero element");
        if (exp_.empty()) throw std::logic_error("ExtensionField::log: tables not built");
        return log_[a];
    }

    std::int64_t exp(std::int64_t e) const {
        if (exp_.empty()) throw std::logic_error("ExtensionField::exp: tables not built");
        const std::int64_t N = group_order();
        e %= N;
        if (e < 0) e += N;
        return exp_[e];
    }

    std::int64_t pi() const { return pi_; }                      // primitive element
    std::int64_t sigma() const { return sigma_; }                // order-n root of unity

    std::int64_t element_order(std::int64_t a) const {
        if (a == 0) throw std::domain_error("ExtensionField::element_order: zero element");
        std::int64_t ord = group_order();
        for (const auto& [q, mult] : group_order_factored_.factors) {
            const std::int64_t qi = static_cast<std::int64_t>(q);
            (void)mult;
            while (ord % qi == 0 && pow(a, ord / qi) == 1) ord /= qi;
        }
        return ord;
    }

    std::optional<std::int64_t> as_prime_subfield(std::int64_t a) const {
        return a < p_ ? std::optional<std::int64_t>(a) : std::nullopt;
    }

    std::int64_t trace(std::int64_t a) const {
        std::int64_t acc = 0, t = a;
        for (std::int64_t i = 0; i < m_; ++i) {
            acc = add(acc, t);
            t = pow(t, p_);
        }
        auto s = as_prime_subfield(acc);
        if (!s) throw std::logic_error("ExtensionField::trace: result outside prime subfield");
        return *s;
    }

    Poly to_poly(std::int64_t a) const { return Poly(p_, unpack(a)); }

    std::int64_t from_poly(const Poly& f) const {
        Poly r = poly_mod(f, modulus_);
        return pack(r.coeffs());
    }

    // All monic primitive polynomials of degree m, ascending in coefficient
    // lex order.  The audit's modulus hunts iterate this list.
    static std::vector<Poly> primitive_moduli(std::int64_t p, std::int64_t m);

    ExtensionField(std::int64_t p, std::int64_t m, Poly modulus, FactoredInteger gof);

  private:
    std::int64_t mul_polybasis(std::int64_t a, std::int64_t b) const;
    void build_tables();

    std::int64_t p_, m_, q_, n_;
    Poly modulus_;
    FactoredInteger group_order_factored_;
    std::int64_t pi_ = 0, sigma_ = 0;
    std::vector<std::uint32_t> exp_, log_, zech_;
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

inline std::int64_t ExtensionField::mul_polybasis(std::int64_t a, std::int64_t b) const {
    std::vector<std::int64_t> da = unpack(a), db = unpack(b);
    std::vector<std::int64_t> prod(2 * m_ - 1, 0);
    for (std::int64_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::int64_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // reduce by the monic modulus
    const auto& mc = modulus_.coeffs();
    for (std::int64_t i = 2 * m_ - 2; i >= m_; --i) {
        std::int64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::int64_t j = 0; j < m_; ++j) {
            std::int64_t t = (prod[i - m_ + j] - c * mc[j]) % p_;
            prod[i - m_ + j] = t < 0 ? t + p_ : t;
        }
    }
    prod.resize(m_);
    return pack(prod);
}

inline ExtensionField::ExtensionField(std::int64_t p, std::int64_t m, Poly modulus,
                                      FactoredInteger gof)
    : p_(p), m_(m), modulus_(std::move(modulus)), group_order_factored_(std::move(gof)) {
    q_ = 1;
    for (std::int64_t i = 0; i < m_; ++i) {
        if (q_ > (std::int64_t(1) << 62) / p_)
            throw std::invalid_argument("ExtensionField: p^m too large");
        q_ *= p_;
    }
    n_ = 2 * (q_ - 1) / (p_ - 1);
    pi_ = from_poly(Poly::x(p_));
    if (q_ <= kTableLimit) build_tables();
    sigma_ = pow(pi_, (p_ - 1) / 2);
}

inline void ExtensionField::build_tables() {
    const std::int64_t N = q_ - 1;
    exp_.assign(N, 0);
    log_.assign(q_, kNoLog);
    std::vector<std::int64_t> cur(m_, 0);
    cur[0] = 1;  // pi^0
    const auto& mc = modulus_.coeffs();
    for (std::int64_t e = 0; e < N; ++e) {
        std::int64_t packed = 0;
        for (std::int64_t i = m_; i-- > 0;) packed = packed * p_ + cur[i];
        exp_[e] = static_cast<std::uint32_t>(packed);
        log_[packed] = static_cast<std::uint32_t>(e);
        // cur *= x, reduced by the monic modulus
        std::int64_t carry = cur[m_ - 1];
        for (std::int64_t i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry) {
            for (std::int64_t i = 0; i < m_; ++i) {
                std::int64_t t = (cur[i] - carry * mc[i]) % p_;
                cur[i] = t < 0 ? t + p_ : t;
            }
        }
    }
    // Zech logarithms: zech_[e] = log(1 + pi^e), kNoLog when 1 + pi^e = 0
    zech_.assign(N, kNoLog);
    for (std::int64_t e = 0; e < N; ++e) {
        std::int64_t w = add_digitwise(1, exp_[e]);
        if (w != 0) zech_[e] = log_[w];
    }
}

inline std::shared_ptr<const ExtensionField> ExtensionField::make(
    std::int64_t p, std::int64_t m, std::optional<Poly> modulus_override) {
    if (m < 1) throw std::invalid_argument("ExtensionField::make: m must be >= 1");
    PrimeField F(p);  // validates p odd prime

    BigInt q = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (BigInt(1) << 62)) throw std::invalid_argument("ExtensionField::make: p^m too large");
    }
    FactoredInteger gof = factor_integer(q - 1);

    if (modulus_override) {
        const Poly& f = *modulus_override;
        if (f.modulus() != p || f.is_zero() ||
            static_cast<std::int64_t>(f.degree_or_throw()) != m || !f.is_monic())
            throw std::invalid_argument("ExtensionField::make: override must be monic of degree m");
        if (!is_irreducible(f))
            throw std::invalid_argument("ExtensionField::make: override is not irreducible");
        if (!is_primitive(f, gof))
            throw std::invalid_argument("ExtensionField::make: override is not primitive");
        return std::make_shared<ExtensionField>(p, m, f, std::move(gof));
    }

    // Canonical modulus: the monic primitive polynomial whose coefficient
    // vector (c_0, ..., c_{m-1}) is lexicographically smallest.  Cached, so
    // repeated constructions are reproducible and cheap.
    static std::mutex cache_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, m});
        if (it != cache.end())
            return std::make_shared<ExtensionField>(p, m, it->second, std::move(gof));
    }

    std::int64_t total = 1;
    for (std::int64_t i = 0; i < m; ++i) total *= p;
    for (std::int64_t counter = 0; counter < total; ++counter) {
        // digits of counter, most significant first, give (c_0, ..., c_{m-1})
        std::vector<std::int64_t> c(m + 1, 0);
        c[m] = 1;
        std::int64_t t = counter;
        for (std::int64_t i = m - 1; i >= 0; --i) {
            c[i] = t % p;
            t /= p;
        }
        if (c[0] == 0) continue;  // divisible by x, never irreducible for m >= 1
        Poly f(p, c);
        if (!is_irreducible(f)) continue;
        if (!is_primitive(f, gof)) continue;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            cache.emplace(std::make_pair(p, m), f);
        }
        return std::make_shared<ExtensionField>(p, m, f, std::move(gof));
    }
    throw std::logic_error("ExtensionField::make: no primitive polynomial found");
}

inline std::vector<Poly> ExtensionField::primitive_moduli(std::int64_t p, std::int64_t m) {
    PrimeField F(p);
    static std::mutex cache_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, m});
        if (it != cache.end()) return it->second;
    }
    BigInt q = 1;
    for (std::int64_t i = 0; i < m; ++i) q *= p;
    FactoredInteger gof = factor_integer(q - 1);

    std::vector<Poly> out;
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < m; ++i) total *= p;
    for (std::int64_t counter = 0; counter < total; ++counter) {
        std::vector<std::int64_t> c(m + 1, 0);
        c[m] = 1;
        std::int64_t t = counter;
        for (std::int64_t i = m - 1; i >= 0; --i) {
            c[i] = t % p;
            t /= p;
        }
        if (c[0] == 0) continue;
        Poly f(p, c);
        if (!is_irreducible(f)) continue;
        if (!is_primitive(f, gof)) continue;
        out.push_back(f);
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::make_pair(p, m), out);
    }
    return out;
}

// The primitive n-th root of unity sigma = pi^((p-1)/2).
inline std::int64_t root_of_unity(const ExtensionField& field) { return field.sigma(); }

// Lightweight value-with-field-handle wrapper.
struct ExtElement {
    const ExtensionField* field = nullptr;
    std::int64_t v = 0;

    ExtElement() = default;
    ExtElement(const ExtensionField& f, std::int64_t packed) : field(&f), v(packed) {}

    ExtElement operator+(const ExtElement& o) const { return {*field, field->add(v, o.v)}; }
    ExtElement operator-(const ExtElement& o) const { return {*field, field->sub(v, o.v)}; }
    ExtElement operator*(const ExtElement& o) const { return {*field, field->mul(v, o.v)}; }
    ExtElement operator-() const { return {*field, field->neg(v)}; }
    bool operator==(const ExtElement& o) const { return v == o.v; }
    bool operator!=(const ExtElement& o) const { return v != o.v; }
    ExtElement pow(std::int64_t e) const { return {*field, field->pow(v, e)}; }
    bool is_zero() const { return v == 0; }
};

}  // namespace pcyclic
