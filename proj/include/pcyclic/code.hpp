#pragma once

// Cyclic codes of length n over GF(p) with the two zeros sigma^u, sigma^v:
// minimal polynomials via conjugate products, generator m_u * m_v,
// systematic encoding and single-error syndrome decoding.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcyclic/cyclotomic.hpp"
#include "pcyclic/ext_field.hpp"

namespace pcyclic {

class same_coset_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Minimal polynomial of sigma^j over GF(p): the product of (x - sigma^i)
// over the cyclotomic coset of j.  Every coefficient of the product must
// land in the prime subfield; anything else indicates a field bug.
inline Poly minimal_polynomial(const ExtensionField& field, const CosetTable& table,
                               std::int64_t j) {
    const std::int64_t p = field.p();
    const std::int64_t sigma = field.sigma();
    const auto& orbit = table.members(j);

    // product in GF(p^m)[x], coefficients as packed field elements
    std::vector<std::int64_t> prod{1};  // the constant polynomial 1
    for (std::int64_t i : orbit) {
        std::int64_t root = field.pow(sigma, i);
        std::vector<std::int64_t> next(prod.size() + 1, 0);
        for (std::size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] = field.add(next[k + 1], prod[k]);
            next[k] = field.sub(next[k], field.mul(root, prod[k]));
        }
        prod = std::move(next);
    }

    std::vector<std::int64_t> coeffs(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k) {
        auto c = field.as_prime_subfield(prod[k]);
        if (!c)
            throw std::logic_error(
                "minimal_polynomial: coefficient outside the prime subfield");
        coeffs[k] = *c;
    }
    return Poly(p, std::move(coeffs));
}

struct CyclicCode {
    FieldPtr field;
    std::shared_ptr<const CosetTable> cosets;
    std::int64_t u = 1, v = 0;
    Poly generator = Poly::zero(3);
    std::int64_t dimension = 0;
    std::optional<std::int64_t> claimed_distance;  // set once verified

    std::int64_t n() const { return field->n(); }
    std::int64_t p() const { return field->p(); }
    std::int64_t m() const { return field->m(); }

    // syndrome pair (r(sigma^u), r(sigma^v)) of a length-n word
    std::pair<std::int64_t, std::int64_t> syndromes(
        const std::vector<std::int64_t>& word) const {
        if (static_cast<std::int64_t>(word.size()) != n())
            throw std::invalid_argument("CyclicCode::syndromes: word length != n");
        const ExtensionField& F = *field;
        std::int64_t su = 0, sv = 0;
        const std::int64_t sigma = F.sigma();
        for (std::int64_t i = 0; i < n(); ++i) {
            if (word[i] == 0) continue;
            std::int64_t c = F.from_scalar(word[i]);
            su = F.add(su, F.mul(c, F.pow(sigma, u * i % F.n())));
            sv = F.add(sv, F.mul(c, F.pow(sigma, v * i % F.n())));
        }
        return {su, sv};
    }

    bool is_codeword(const std::vector<std::int64_t>& word) const {
        auto [su, sv] = syndromes(word);
        return su == 0 && sv == 0;
    }
};

inline CyclicCode build_code(FieldPtr field, std::shared_ptr<const CosetTable> table,
                             std::int64_t u, std::int64_t v) {
    const std::int64_t n = field->n();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("build_code: zero exponent out of range");
    if (table->same_coset(u, v))
        throw same_coset_error("build_code: u and v lie in the same cyclotomic coset");

    CyclicCode code;
    code.field = field;
    code.cosets = table;
    code.u = u;
    code.v = v;
    code.generator = minimal_polynomial(*field, *table, u) *
                     minimal_polynomial(*field, *table, v);
    code.dimension = n - static_cast<std::int64_t>(code.generator.degree_or_throw());
    return code;
}

// Systematic encoding: codeword = x^deg(g) * msg - (x^deg(g) * msg mod g),
// so the message symbols appear verbatim in the high-order positions.
inline std::vector<std::int64_t> encode(const CyclicCode& code,
                                        const std::vector<std::int64_t>& message) {
    if (static_cast<std::int64_t>(message.size()) != code.dimension)
        throw std::invalid_argument("encode: message length != dimension");
    const std::int64_t p = code.p();
    const std::size_t dg = code.generator.degree_or_throw();
    Poly msg(p, message);
    Poly shifted = Poly::monomial(p, dg) * msg;
    Poly parity = poly_mod(shifted, code.generator);
    Poly cw = shifted - parity;
    std::vector<std::int64_t> word(code.n(), 0);
    for (std::size_t i = 0; i < cw.coeffs().size(); ++i) word[i] = cw.coeffs()[i];
    return word;
}

struct DecodeResult {
    enum class Status { accepted, corrected, detected_uncorrectable };
    Status status = Status::accepted;
    std::vector<std::int64_t> codeword;  // empty when uncorrectable
    std::int64_t error_position = -1;
    std::int64_t error_magnitude = 0;
};

// Single-error decoding from the two syndromes.  A lone error of magnitude e
// at position i gives (e sigma^{ui}, e sigma^{vi}); scan positions for the
// unique consistent pair.  Requires a code already known to have d >= 3.
inline DecodeResult decode_single_error(const CyclicCode& code,
                                        const std::vector<std::int64_t>& received) {
    if (static_cast<std::int64_t>(received.size()) != code.n())
        throw std::invalid_argument("decode_single_error: word length != n");
    if (code.claimed_distance && *code.claimed_distance < 3)
        throw std::logic_error("decode_single_error: code has minimum distance < 3");
    const ExtensionField& F = *code.field;
    auto [su, sv] = code.syndromes(received);

    DecodeResult out;
    if (su == 0 && sv == 0) {
        out.status = DecodeResult::Status::accepted;
        out.codeword = received;
        return out;
    }
    if (su != 0 && sv != 0) {
        const std::int64_t sigma = F.sigma();
        const std::int64_t n = code.n();
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t eu = F.mul(su, F.inv(F.pow(sigma, code.u * i % n)));
            auto mag = F.as_prime_subfield(eu);
            if (!mag || *mag == 0) continue;
            std::int64_t ev = F.mul(sv, F.inv(F.pow(sigma, code.v * i % n)));
            if (ev != eu) continue;
            out.status = DecodeResult::Status::corrected;
            out.codeword = received;
            out.codeword[i] = PrimeField(code.p()).sub(out.codeword[i], *mag);
            out.error_position = i;
            out.error_magnitude = *mag;
            return out;
        }
    }
    out.status = DecodeResult::Status::detected_uncorrectable;
    return out;
}

}  // namespace pcyclic
