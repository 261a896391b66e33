#pragma once

// Ground-truth auditing of the bundled reference claims: recompute each
// printed example under the canonical modulus, hunt across every primitive
// modulus of the right degree for one reproducing a printed generator
// polynomial, and sweep whole parameter families to confirm that the
// sufficient conditions really do imply optimality.  Discrepancies are
// reported, never silently corrected.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcyclic/constructions.hpp"
#include "pcyclic/distance.hpp"

namespace pcyclic {

struct ReferenceExample {
    std::string id;
    std::int64_t p, m;
    std::int64_t v_printed;
    std::array<std::int64_t, 3> claimed_params;  // [n, k, d]
    std::string claimed_generator;               // comma form, lowest degree first
    ConstructionTag family;
    std::map<std::string, std::int64_t> family_params;
};

inline std::vector<ReferenceExample> bundled_reference_examples() {
    return {
        // x^6 + 3x^5 + 2x^3 + 2x^2 + 4
        {"p5m3-pk1", 5, 3, 10, {62, 50, 4}, "4,0,2,2,0,3,1",
         ConstructionTag::pk1, {{"k", 2}}},
        // x^10 + 6x^9 + 2x^8 + 2x^7 + 6x^6 + 3x^5 + x^4 + 2x^3 + 5x^2 + 6x + 6
        {"p7m5-half", 7, 5, 2800, {5602, 5592, 4}, "6,6,5,2,1,3,6,2,2,6,1",
         ConstructionTag::half_n_minus_one, {}},
        {"p7m5-geom", 7, 5, 400, {5602, 5592, 4}, "6,6,5,2,1,3,6,2,2,6,1",
         ConstructionTag::geometric_sum, {{"s", 4}}},
        // x^14 + x^13 + 2x^10 + x^9 + 2x^8 + x^6 + x^5 + x^4 + 2x^3 + 2
        {"p3m7-shifted", 3, 7, 86, {728, 714, 4}, "2,0,0,2,1,1,1,0,2,1,2,0,0,1,1",
         ConstructionTag::shifted_geometric_sum, {{"s", 3}}},
    };
}

// Computed truth for one (p, m, v) under the canonical modulus.
struct CodeFacts {
    std::int64_t p = 0, m = 0, n = 0;
    std::int64_t v_input = 0;  // as requested, before reduction
    std::int64_t v = 0;        // reduced into Z_n
    bool same_coset = false;   // v shares the coset of 1; no code exists
    std::int64_t coset_leader = -1;
    std::int64_t coset_length = 0;
    std::int64_t dimension = 0;
    std::string generator;
    std::string distance;
    bool optimal = false;
    std::string bound_value, bound_capacity;
    std::optional<WeightWitness> weight4_witness;
};

struct AuditOptions {
    unsigned threads = 1;
    bool hunt_moduli = true;
    std::int64_t weight4_budget = 2'000'000;
};

inline CodeFacts compute_code_facts(std::int64_t p, std::int64_t m, std::int64_t v_raw,
                                    const AuditOptions& opts = {}) {
    CodeFacts facts;
    facts.p = p;
    facts.m = m;
    facts.v_input = v_raw;
    auto field = ExtensionField::make(p, m);
    auto table = std::make_shared<CosetTable>(p, field->n());
    facts.n = field->n();
    facts.v = ((v_raw % facts.n) + facts.n) % facts.n;
    facts.coset_leader = table->leader(facts.v);
    facts.coset_length = table->length(facts.v);
    if (table->same_coset(facts.v, 1)) {
        facts.same_coset = true;
        return facts;
    }
    auto code = build_code(field, table, 1, facts.v);
    facts.dimension = code.dimension;
    facts.generator = code.generator.to_string();
    VerdictOptions vopts;
    vopts.threads = opts.threads;
    vopts.weight4_budget = opts.weight4_budget;
    auto rep = optimality_verdict(code, vopts);
    facts.distance = to_string(rep.verdict.klass);
    facts.optimal = rep.optimal;
    facts.bound_value = rep.verdict.bound_value.str();
    facts.bound_capacity = rep.verdict.bound_capacity.str();
    facts.weight4_witness = rep.verdict.weight4_witness;
    return facts;
}

struct GeneratorHuntResult {
    std::string target;  // claimed generator, comma form
    std::int64_t v = 0;
    std::int64_t moduli_tested = 0;
    std::vector<std::string> matches;  // moduli whose m_1 * m_v equals the target
    std::string best_modulus;          // closest non-exact candidate (Hamming metric)
    std::string best_generator;
    std::int64_t best_distance = -1;   // coefficient positions differing from target
};

namespace detail {

inline std::int64_t coeff_hamming(const Poly& a, const Poly& b) {
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    std::int64_t d = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (a.coeff(i) != b.coeff(i)) ++d;
    return d;
}

}  // namespace detail

// Try every primitive modulus of degree m: does any choice of primitive
// element reproduce the printed generator as m_1 * m_v?  Conjugate choices
// of pi share one modulus, so this enumeration covers all of them.
inline GeneratorHuntResult hunt_generator(std::int64_t p, std::int64_t m, std::int64_t v,
                                          const std::string& target_comma) {
    GeneratorHuntResult res;
    res.target = target_comma;
    res.v = v;
    const Poly target = Poly::from_string(p, target_comma);

    std::int64_t q = 1;
    for (std::int64_t i = 0; i < m; ++i) q *= p;
    const std::int64_t n = 2 * (q - 1) / (p - 1);
    CosetTable table(p, n);
    const std::int64_t vr = ((v % n) + n) % n;
    if (table.same_coset(vr, 1)) return res;  // no code to compare against

    for (const auto& f : ExtensionField::primitive_moduli(p, m)) {
        auto field = ExtensionField::make(p, m, f);
        Poly g = minimal_polynomial(*field, table, 1) * minimal_polynomial(*field, table, vr);
        ++res.moduli_tested;
        if (g == target) {
            res.matches.push_back(f.to_string());
            continue;
        }
        std::int64_t d = detail::coeff_hamming(g, target);
        if (res.best_distance == -1 || d < res.best_distance) {
            res.best_distance = d;
            res.best_modulus = f.to_string();
            res.best_generator = g.to_string();
        }
    }
    return res;
}

struct ExampleAuditRecord {
    std::string example_id;
    std::int64_t p = 0, m = 0, v_printed = 0;
    std::array<std::int64_t, 3> claimed_params{};
    std::string claimed_generator;
    std::vector<std::string> computed_labels;
    std::vector<CodeFacts> computed;  // parallel to computed_labels
    std::optional<HypothesisReport> family_report;
    std::vector<std::pair<std::string, GeneratorHuntResult>> hunts;
    std::string status;  // match | partial | mismatch
    std::vector<std::string> notes;
};

namespace detail {

inline std::string classify(const ExampleAuditRecord& rec) {
    bool params_match = false;
    if (!rec.computed.empty() && !rec.computed.front().same_coset) {
        const CodeFacts& f = rec.computed.front();
        params_match = f.n == rec.claimed_params[0] && f.dimension == rec.claimed_params[1] &&
                       f.distance == "d=" + std::to_string(rec.claimed_params[2]) && f.optimal;
    }
    bool generator_match = false;
    for (const auto& [label, hunt] : rec.hunts) {
        (void)label;
        if (!hunt.matches.empty()) generator_match = true;
    }
    if (params_match && generator_match) return "match";
    if (params_match || generator_match) return "partial";
    return "mismatch";
}

}  // namespace detail

inline std::vector<ExampleAuditRecord> audit_reference_examples(const AuditOptions& opts = {}) {
    std::vector<ExampleAuditRecord> out;

    for (const auto& ex : bundled_reference_examples()) {
        ExampleAuditRecord rec;
        rec.example_id = ex.id;
        rec.p = ex.p;
        rec.m = ex.m;
        rec.v_printed = ex.v_printed;
        rec.claimed_params = ex.claimed_params;
        rec.claimed_generator = ex.claimed_generator;

        rec.family_report = check_construction_hypotheses(ex.p, ex.m, ex.family, ex.family_params);
        const std::int64_t derived_v = rec.family_report->v;

        rec.computed_labels.push_back("printed v=" + std::to_string(ex.v_printed));
        rec.computed.push_back(compute_code_facts(ex.p, ex.m, ex.v_printed, opts));
        if (derived_v != ex.v_printed) {
            rec.notes.push_back("closed form of the construction gives v=" +
                                std::to_string(derived_v) + ", not the printed v=" +
                                std::to_string(ex.v_printed));
            rec.computed_labels.push_back("closed-form v=" + std::to_string(derived_v));
            rec.computed.push_back(compute_code_facts(ex.p, ex.m, derived_v, opts));
        }
        if (ex.id == "p3m7-shifted") {
            // the printed length 728 only fits m = 6; audit that reading too
            rec.computed_labels.push_back("printed v=86 at m=6 (n=728 reading)");
            rec.computed.push_back(compute_code_facts(3, 6, 86, opts));
        }

        if (opts.hunt_moduli) {
            rec.hunts.emplace_back("printed v=" + std::to_string(ex.v_printed),
                                   hunt_generator(ex.p, ex.m, ex.v_printed, ex.claimed_generator));
            if (derived_v != ex.v_printed)
                rec.hunts.emplace_back("closed-form v=" + std::to_string(derived_v),
                                       hunt_generator(ex.p, ex.m, derived_v, ex.claimed_generator));
        }

        rec.status = detail::classify(rec);
        out.push_back(std::move(rec));
    }

    // The two p=7 examples print one and the same generator polynomial;
    // record whether that is forced (same cyclotomic coset => same code).
    {
        ExampleAuditRecord rec;
        rec.example_id = "p7m5-generator-identity";
        rec.p = 7;
        rec.m = 5;
        rec.v_printed = 400;
        rec.claimed_params = {5602, 5592, 4};
        rec.claimed_generator = "6,6,5,2,1,3,6,2,2,6,1";
        auto field = ExtensionField::make(7, 5);
        auto table = std::make_shared<CosetTable>(7, field->n());
        const bool same = table->same_coset(400, 2800);
        Poly g400 = minimal_polynomial(*field, *table, 1) * minimal_polynomial(*field, *table, 400);
        Poly g2800 =
            minimal_polynomial(*field, *table, 1) * minimal_polynomial(*field, *table, 2800);
        const bool equal = g400 == g2800;
        rec.notes.push_back(same ? "v=400 and v=2800 lie in the same 7-cyclotomic coset mod 5602; "
                                   "the two codes are one code"
                                 : "v=400 and v=2800 lie in different cyclotomic cosets");
        rec.notes.push_back(equal ? "m_1*m_400 == m_1*m_2800 under the canonical modulus"
                                  : "m_1*m_400 != m_1*m_2800 under the canonical modulus");
        rec.status = (same && equal) ? "match" : "mismatch";
        out.push_back(std::move(rec));
    }
    return out;
}

// ---- soundness sweep -------------------------------------------------------

struct SweepReport {
    std::int64_t p = 0, m = 0, n = 0;
    std::int64_t candidates = 0;         // v not in C_1 with |C_v| = m
    std::int64_t qualified = 0;          // candidates passing all three conditions
    std::int64_t confirmed_optimal = 0;  // qualified with verdict optimal [n, n-2m, 4]
    std::vector<std::int64_t> qualified_vs;
    std::vector<std::int64_t> counterexamples;       // qualified but not optimal
    std::vector<std::int64_t> remark_violations;     // cond1&&cond2 but not (v even, p=3 mod 4)
    std::vector<std::int64_t> reduction_violations;  // cond3 over Pi != cond3 over Pi minus -1
    std::vector<std::int64_t> length_lemma_anomalies;

    bool passed() const {
        return counterexamples.empty() && remark_violations.empty() &&
               reduction_violations.empty();
    }
};

// For every v in Z_n with a full-length coset, check: conditions hold =>
// the code verifies as optimal [n, n-2m, 4].  Counterexamples would be
// errata in the underlying theory; none are expected.
inline SweepReport soundness_sweep(std::int64_t p, std::int64_t m,
                                   const AuditOptions& opts = {}) {
    SweepReport rep;
    rep.p = p;
    rep.m = m;
    auto field = ExtensionField::make(p, m);
    auto table = std::make_shared<CosetTable>(p, field->n());
    rep.n = field->n();
    rep.length_lemma_anomalies = coset_length_anomalies(*table, m);

    for (std::int64_t v = 0; v < rep.n; ++v) {
        if (table->length(v) != m) continue;
        if (table->same_coset(v, 1)) continue;
        ++rep.candidates;
        auto cond = check_lemma_conditions(*field, *table, v, opts.threads);
        if (cond.cond1 && cond.cond2) {
            if (!cond.remark_consistent) rep.remark_violations.push_back(v);
            if (cond.cond3 != cond.cond3_full_pi) rep.reduction_violations.push_back(v);
        }
        if (!cond.all()) continue;
        ++rep.qualified;
        rep.qualified_vs.push_back(v);
        auto code = build_code(field, table, 1, v);
        VerdictOptions vopts;
        vopts.threads = opts.threads;
        vopts.weight4_budget = 0;  // bound exclusion certifies d = 4 here
        auto verdict = optimality_verdict(code, vopts);
        if (verdict.optimal)
            ++rep.confirmed_optimal;
        else
            rep.counterexamples.push_back(v);
    }
    return rep;
}

}  // namespace pcyclic
