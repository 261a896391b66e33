#pragma once

// The sufficient-condition machinery behind the optimality claims:
//  - the three-part condition set on v (gcd, congruence class, and the
//    exponential equations (x+a)^v = +-(x^v+a) having no solution on the
//    order-n cyclic group, with or without -1 excluded);
//  - the linear congruence (p^t - 1) v = p^s - p^h (mod p^m - 1) whose
//    solutions parameterize the second family;
//  - the closed-form families v = p^k + 1, v = n/2 - 1, v = (p^s-1)/(p-1)
//    and v = n/2 + (p^s-1)/(p-1), each with its named hypothesis list.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcyclic/code.hpp"
#include "pcyclic/parallel.hpp"

namespace pcyclic {

// A solution x0 = sigma^exponent of (x0 + alpha)^v = sign * (x0^v + alpha).
struct EquationSolution {
    std::int64_t exponent = 0;
    std::int64_t alpha = 0;
    int sign = +1;

    bool operator<(const EquationSolution& o) const {
        if (exponent != o.exponent) return exponent < o.exponent;
        if (alpha != o.alpha) return alpha < o.alpha;
        return sign < o.sign;
    }
};

struct LemmaConditionReport {
    std::int64_t v = 0;
    bool cond1 = false;  // gcd(v-1, n) == 1
    bool cond2 = false;  // v == 1 (mod (p-1)/2)
    bool cond3 = false;  // equations unsolvable over Pi \ {-1}
    bool cond3_full_pi = false;          // equations unsolvable over all of Pi
    std::optional<EquationSolution> failing_witness;       // restricted domain
    std::optional<EquationSolution> failing_witness_full;  // full Pi
    bool remark_consistent = true;  // cond1 && cond2 implies v even and p = 3 (mod 4)

    bool all() const { return cond1 && cond2 && cond3; }
};

// Exhaustive evaluation of the three conditions for C_p(1, v).  Both sign
// branches are tested in one fused pass over (i, alpha); the full-Pi variant
// is tracked alongside the restricted one so callers can confirm that
// excluding -1 = sigma^(n/2) never changes the outcome.
inline LemmaConditionReport check_lemma_conditions(const ExtensionField& field,
                                                   const CosetTable& table, std::int64_t v,
                                                   unsigned threads = 1) {
    const std::int64_t n = field.n();
    if (v < 0 || v >= n) throw std::out_of_range("check_lemma_conditions: v out of range");
    (void)table;

    LemmaConditionReport rep;
    rep.v = v;
    const std::int64_t p = field.p();
    rep.cond1 = gcd_i64(v - 1, n) == 1;  // gcd(0, n) = n, so v = 1 fails
    const std::int64_t half = (p - 1) / 2;
    rep.cond2 = ((v - 1) % half + half) % half == 0;

    const std::int64_t sigma = field.sigma();
    const std::int64_t sigma_v = field.pow(sigma, v);
    const std::int64_t half_n = n / 2;

    struct ChunkResult {
        std::optional<EquationSolution> restricted, full;
    };
    auto merge = [](ChunkResult a, ChunkResult b) {
        if (!a.restricted || (b.restricted && *b.restricted < *a.restricted))
            a.restricted = b.restricted;
        if (!a.full || (b.full && *b.full < *a.full)) a.full = b.full;
        return a;
    };
    auto chunk_fn = [&](std::int64_t begin, std::int64_t end) {
        ChunkResult res;
        // x0 = sigma^i and x0^v = sigma^(iv), advanced incrementally
        std::int64_t x0 = field.pow(sigma, begin);
        std::int64_t x0v = field.pow(sigma, (__int128(begin) * v) % n);
        for (std::int64_t i = begin; i < end; ++i) {
            for (std::int64_t alpha = 1; alpha < p; ++alpha) {
                const std::int64_t lhs = field.pow(field.add(x0, field.from_scalar(alpha)), v);
                const std::int64_t rhs = field.add(x0v, field.from_scalar(alpha));
                int sign = 0;
                if (lhs == field.neg(rhs))
                    sign = +1;  // (x+a)^v + (x^v+a) = 0
                else if (lhs == rhs)
                    sign = -1;  // (x+a)^v - (x^v+a) = 0
                if (sign != 0) {
                    EquationSolution sol{i, alpha, sign};
                    if (!res.full || sol < *res.full) res.full = sol;
                    if (i != half_n && (!res.restricted || sol < *res.restricted))
                        res.restricted = sol;
                }
            }
            x0 = field.mul(x0, sigma);
            x0v = field.mul(x0v, sigma_v);
        }
        return res;
    };

    // Pi = {sigma^1, ..., sigma^(n-1)}
    ChunkResult found;
    {
        const std::int64_t total = n - 1;
        const std::int64_t chunk = std::max<std::int64_t>(64, total / 64);
        auto shifted = parallel_map_reduce<ChunkResult>(
            total, chunk, threads, ChunkResult{},
            [&](std::int64_t b, std::int64_t e) { return chunk_fn(b + 1, e + 1); }, merge);
        found = shifted;
    }
    rep.cond3 = !found.restricted.has_value();
    rep.cond3_full_pi = !found.full.has_value();
    rep.failing_witness = found.restricted;
    rep.failing_witness_full = found.full;

    if (rep.cond1 && rep.cond2) rep.remark_consistent = (v % 2 == 0) && (p % 4 == 3);
    return rep;
}

// ---- the zero congruence (p^t - 1) v = p^s - p^h (mod p^m - 1) ------------

struct CongruenceSolution {
    std::int64_t p = 0, m = 0, t = 0, s = 0, h = 0;
    std::int64_t modulus = 0;  // p^m - 1
    std::int64_t n = 0;
    std::int64_t lhs_coeff = 0;  // p^t - 1 mod modulus
    std::int64_t rhs = 0;        // p^s - p^h mod modulus
    std::int64_t g = 0;          // gcd(lhs_coeff, modulus)
    bool solvable = false;
    std::int64_t base_solution = -1;  // smallest nonnegative solution mod modulus
    std::int64_t step = 0;            // modulus / g
    std::int64_t count = 0;           // number of solutions mod modulus
    std::vector<std::int64_t> solutions_mod_group;  // capped when count is large
    bool solutions_truncated = false;
    std::vector<std::int64_t> solutions_mod_n;  // deduplicated, ascending
};

inline CongruenceSolution solve_zero_congruence(std::int64_t p, std::int64_t m, std::int64_t t,
                                                std::int64_t s, std::int64_t h,
                                                std::int64_t enumeration_cap = 10000) {
    if (m < 1) throw std::invalid_argument("solve_zero_congruence: m must be >= 1");
    if (t < 0 || t > m - 1 || s < 0 || s > m - 1 || h < 0 || h > m - 1)
        throw std::out_of_range("solve_zero_congruence: t, s, h must lie in [0, m-1]");

    CongruenceSolution sol;
    sol.p = p;
    sol.m = m;
    sol.t = t;
    sol.s = s;
    sol.h = h;

    std::int64_t M = 1;
    for (std::int64_t i = 0; i < m; ++i) M *= p;
    M -= 1;
    sol.modulus = M;
    sol.n = 2 * M / (p - 1);

    auto pw = [&](std::int64_t e) { return mod_pow(p, e, M); };
    sol.lhs_coeff = ((pw(t) - 1) % M + M) % M;
    sol.rhs = ((pw(s) - pw(h)) % M + M) % M;

    sol.g = sol.lhs_coeff == 0 ? M : gcd_i64(sol.lhs_coeff, M);
    sol.solvable = sol.rhs % sol.g == 0;
    if (!sol.solvable) return sol;

    sol.step = M / sol.g;
    sol.count = sol.g;
    if (sol.lhs_coeff == 0) {
        sol.base_solution = 0;  // every v solves 0*v = 0
    } else {
        const std::int64_t a = sol.lhs_coeff / sol.g;
        const std::int64_t c = sol.rhs / sol.g;
        const std::int64_t M2 = sol.step;
        auto e = extended_gcd(a % M2, M2);
        std::int64_t inv = ((e.x % M2) + M2) % M2;
        sol.base_solution = static_cast<std::int64_t>(__int128(inv) * c % M2);
    }

    for (std::int64_t i = 0; i < sol.count && i < enumeration_cap; ++i)
        sol.solutions_mod_group.push_back(sol.base_solution + i * sol.step);
    sol.solutions_truncated = sol.count > enumeration_cap;

    // Reduction mod n: the image of {v0 + i*step} has at most n/gcd(step, n)
    // distinct residues, so the enumeration below is bounded by n.
    const std::int64_t period = sol.n / gcd_i64(sol.step, sol.n);
    std::vector<std::int64_t> mod_n;
    for (std::int64_t i = 0; i < sol.count && i < period; ++i)
        mod_n.push_back(static_cast<std::int64_t>(
            (__int128(sol.base_solution) + __int128(i) * sol.step) % sol.n));
    std::sort(mod_n.begin(), mod_n.end());
    mod_n.erase(std::unique(mod_n.begin(), mod_n.end()), mod_n.end());
    sol.solutions_mod_n = std::move(mod_n);
    return sol;
}

// ---- closed-form families --------------------------------------------------

enum class ConstructionTag {
    pk1,                    // v = p^k + 1
    half_n_minus_one,       // v = n/2 - 1          (t=1, s=0, h=1)
    geometric_sum,          // v = (p^s-1)/(p-1)    (t=1, h=0, s even)
    shifted_geometric_sum,  // v = n/2 + (p^s-1)/(p-1)  (t=1, h=0, s odd)
    congruence              // any solution of the congruence, checked directly
};

inline std::string to_string(ConstructionTag tag) {
    switch (tag) {
        case ConstructionTag::pk1: return "pk1";
        case ConstructionTag::half_n_minus_one: return "half-n-minus-1";
        case ConstructionTag::geometric_sum: return "geometric-sum";
        case ConstructionTag::shifted_geometric_sum: return "shifted-geometric-sum";
        case ConstructionTag::congruence: return "congruence";
    }
    return "?";
}

struct HypothesisReport {
    ConstructionTag tag = ConstructionTag::congruence;
    std::map<std::string, std::int64_t> params;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::int64_t v = -1;        // value derived from the closed form
    std::int64_t v_mod_n = -1;  // reduced into Z_n
    bool prediction = false;    // "optimal" iff every hypothesis holds

    bool hypothesis(const std::string& name) const {
        for (const auto& [k, val] : hypotheses)
            if (k == name) return val;
        throw std::out_of_range("HypothesisReport: unknown hypothesis " + name);
    }
};

inline HypothesisReport check_construction_hypotheses(
    std::int64_t p, std::int64_t m, ConstructionTag tag,
    const std::map<std::string, std::int64_t>& params) {
    PrimeField F(p);  // validates p
    if (m < 1) throw std::invalid_argument("check_construction_hypotheses: m must be >= 1");

    std::int64_t q = 1;
    for (std::int64_t i = 0; i < m; ++i) q *= p;
    const std::int64_t n = 2 * (q - 1) / (p - 1);
    const std::int64_t half = (p - 1) / 2;

    auto param = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("check_construction_hypotheses: missing param " + key);
        return it->second;
    };
    auto pow_i64 = [&](std::int64_t e) {
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < e; ++i) r *= p;
        return r;
    };

    HypothesisReport rep;
    rep.tag = tag;
    rep.params = params;
    auto hyp = [&rep](std::string name, bool val) {
        rep.hypotheses.emplace_back(std::move(name), val);
    };

    switch (tag) {
        case ConstructionTag::pk1: {
            const std::int64_t k = param("k");
            if (k < 0 || k > m - 1)
                throw std::out_of_range("pk1: k must lie in [0, m-1]");
            rep.v = pow_i64(k) + 1;
            hyp("m odd and m > 2", m > 2 && m % 2 == 1);
            hyp("gcd(m, k) = 1", gcd_i64(m, k) == 1);
            hyp("gcd(m, p-1) = 1", gcd_i64(m, p - 1) == 1);
            hyp("(p-1)/2 divides k", k % half == 0);
            break;
        }
        case ConstructionTag::half_n_minus_one: {
            rep.v = n / 2 - 1;
            hyp("m odd and m > 2", m > 2 && m % 2 == 1);
            hyp("gcd(m, p-1) = 1", gcd_i64(m, p - 1) == 1);
            hyp("(p-1)/2 divides m-2", (m - 2) % half == 0);
            break;
        }
        case ConstructionTag::geometric_sum: {
            const std::int64_t s = param("s");
            if (s < 2 || s > m - 1)
                throw std::out_of_range("geometric_sum: s must lie in [2, m-1]");
            rep.v = (pow_i64(s) - 1) / (p - 1);
            hyp("m odd and m > 2", m > 2 && m % 2 == 1);
            hyp("gcd(m, p-1) = 1", gcd_i64(m, p - 1) == 1);
            hyp("s even", s % 2 == 0);
            hyp("gcd(m, s) = 1", gcd_i64(m, s) == 1);
            hyp("gcd(m, s-1) = 1", gcd_i64(m, s - 1) == 1);
            hyp("(p-1)/2 divides s-1", (s - 1) % half == 0);
            break;
        }
        case ConstructionTag::shifted_geometric_sum: {
            const std::int64_t s = param("s");
            if (s < 2 || s > m - 1)
                throw std::out_of_range("shifted_geometric_sum: s must lie in [2, m-1]");
            rep.v = n / 2 + (pow_i64(s) - 1) / (p - 1);
            hyp("m odd and m > 2", m > 2 && m % 2 == 1);
            hyp("gcd(m, p-1) = 1", gcd_i64(m, p - 1) == 1);
            hyp("s odd", s % 2 == 1);
            hyp("gcd(m, s) = 1", gcd_i64(m, s) == 1);
            hyp("gcd(m, s-1) = 1", gcd_i64(m, s - 1) == 1);
            hyp("(p-1)/2 divides m+s-1", (m + s - 1) % half == 0);
            break;
        }
        case ConstructionTag::congruence: {
            const std::int64_t t = param("t"), s = param("s"), h = param("h");
            const std::int64_t v = param("v");
            rep.v = v;
            const std::int64_t M = q - 1;
            const std::int64_t lhs = static_cast<std::int64_t>(
                __int128(((mod_pow(p, t, M) - 1) % M + M) % M) * ((v % M + M) % M) % M);
            const std::int64_t rhs = ((mod_pow(p, s, M) - mod_pow(p, h, M)) % M + M) % M;
            hyp("v solves the congruence", lhs == rhs);
            hyp("m > 2", m > 2);
            hyp("gcd(m, t) = 1", gcd_i64(m, t) == 1);
            hyp("gcd(m, s-h) = 1", gcd_i64(m, s - h) == 1);
            hyp("gcd(m, p-1) divides 2", 2 % gcd_i64(m, p - 1) == 0);
            hyp("gcd(p^h - v, n) = 1", gcd_i64(((pow_i64(h) - v) % n + n) % n, n) == 1);
            hyp("gcd(v-1, n) = 1", gcd_i64(((v - 1) % n + n) % n, n) == 1);
            hyp("v = 1 (mod (p-1)/2)", ((v - 1) % half + half) % half == 0);
            break;
        }
    }

    rep.v_mod_n = ((rep.v % n) + n) % n;
    rep.prediction = true;
    for (const auto& [name, ok] : rep.hypotheses) {
        (void)name;
        rep.prediction = rep.prediction && ok;
    }
    return rep;
}

// Closed forms that hit a given v, plus fully-satisfied congruence instances.
inline std::vector<HypothesisReport> detect_matching_constructions(std::int64_t p,
                                                                   std::int64_t m,
                                                                   std::int64_t v) {
    std::vector<HypothesisReport> out;
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < m; ++i) q *= p;
    const std::int64_t n = 2 * (q - 1) / (p - 1);

    std::int64_t pk = 1;
    for (std::int64_t k = 0; k <= m - 1; ++k) {
        if (pk + 1 == v)
            out.push_back(check_construction_hypotheses(p, m, ConstructionTag::pk1, {{"k", k}}));
        pk *= p;
    }
    if (v == n / 2 - 1)
        out.push_back(check_construction_hypotheses(p, m, ConstructionTag::half_n_minus_one, {}));
    std::int64_t ps = p;  // p^s
    for (std::int64_t s = 2; s <= m - 1; ++s) {
        ps *= p;
        const std::int64_t geo = (ps - 1) / (p - 1);
        if (geo == v)
            out.push_back(
                check_construction_hypotheses(p, m, ConstructionTag::geometric_sum, {{"s", s}}));
        if (n / 2 + geo == v)
            out.push_back(check_construction_hypotheses(
                p, m, ConstructionTag::shifted_geometric_sum, {{"s", s}}));
    }
    // congruence instances whose hypothesis list fully holds
    for (std::int64_t t = 1; t <= m - 1; ++t) {
        for (std::int64_t s = 0; s <= m - 1; ++s) {
            for (std::int64_t h = 0; h <= m - 1; ++h) {
                if (s == h) continue;
                auto rep = check_construction_hypotheses(
                    p, m, ConstructionTag::congruence,
                    {{"t", t}, {"s", s}, {"h", h}, {"v", v}});
                if (rep.prediction) out.push_back(rep);
            }
        }
    }
    return out;
}

}  // namespace pcyclic
