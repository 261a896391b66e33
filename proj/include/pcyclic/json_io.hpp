#pragma once

// JSON views of the report types.  nlohmann::json keeps object keys sorted,
// so emitted documents re-serialize byte-identically after a parse.

#include <json.hpp>

#include "pcyclic/audit.hpp"
#include "pcyclic/constructions.hpp"
#include "pcyclic/distance.hpp"

namespace pcyclic {

using nlohmann::json;

inline json to_json(const ExtensionField& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus().to_string()}, {"n", f.n()}};
}

inline json to_json(const CosetTable& t) {
    json arr = json::array();
    for (std::int64_t l : t.leaders()) {
        arr.push_back(json{{"leader", l},
                           {"length", t.length(l)},
                           {"members", t.members(l)}});
    }
    return arr;
}

inline json to_json(const CyclicCode& c) {
    return json{{"p", c.p()},          {"m", c.m()},
                {"n", c.n()},          {"u", c.u},
                {"v", c.v},            {"generator", c.generator.to_string()},
                {"dimension", c.dimension}};
}

inline json to_json(const WeightWitness& w) {
    return json{{"support", w.support}, {"coeffs", w.coeffs}};
}

inline json to_json(const DistanceVerdict& d) {
    json witness;
    if (d.low_weight_witness)
        witness = to_json(*d.low_weight_witness);
    else if (d.weight4_witness)
        witness = to_json(*d.weight4_witness);
    else
        witness = nullptr;
    return json{{"verdict", to_string(d.klass)},
                {"bound_value", d.bound_value.str()},
                {"bound_capacity", d.bound_capacity.str()},
                {"witness", witness}};
}

inline json to_json(const OptimalityReport& r) {
    json j{{"p", r.p},
           {"m", r.m},
           {"n", r.n},
           {"u", r.u},
           {"v", r.v},
           {"dimension", r.dimension},
           {"generator", r.generator.to_string()},
           {"verdict", to_json(r.verdict)},
           {"dimension_matches", r.dimension_matches},
           {"optimal", r.optimal}};
    if (r.claimed_params)
        j["claimed"] = json{{"n", (*r.claimed_params)[0]},
                            {"k", (*r.claimed_params)[1]},
                            {"d", (*r.claimed_params)[2]}};
    else
        j["claimed"] = nullptr;
    j["discrepancy"] = r.discrepancy ? json(*r.discrepancy) : json(nullptr);
    return j;
}

inline json to_json(const EquationSolution& s) {
    return json{{"exponent", s.exponent}, {"alpha", s.alpha}, {"sign", s.sign}};
}

inline json to_json(const LemmaConditionReport& r) {
    json j{{"v", r.v},
           {"cond1_gcd", r.cond1},
           {"cond2_congruence", r.cond2},
           {"cond3_equations", r.cond3},
           {"cond3_full_pi", r.cond3_full_pi},
           {"remark_consistent", r.remark_consistent},
           {"all", r.all()}};
    j["failing_witness"] = r.failing_witness ? to_json(*r.failing_witness) : json(nullptr);
    j["failing_witness_full"] =
        r.failing_witness_full ? to_json(*r.failing_witness_full) : json(nullptr);
    return j;
}

inline json to_json(const CongruenceSolution& s) {
    json j{{"p", s.p},
           {"m", s.m},
           {"t", s.t},
           {"s", s.s},
           {"h", s.h},
           {"modulus", s.modulus},
           {"n", s.n},
           {"lhs_coeff", s.lhs_coeff},
           {"rhs", s.rhs},
           {"gcd", s.g},
           {"solvable", s.solvable}};
    if (s.solvable) {
        j["base_solution"] = s.base_solution;
        j["step"] = s.step;
        j["count"] = s.count;
        j["solutions_mod_group"] = s.solutions_mod_group;
        j["solutions_truncated"] = s.solutions_truncated;
        j["solutions_mod_n"] = s.solutions_mod_n;
    }
    return j;
}

inline json to_json(const HypothesisReport& r) {
    json hyps = json::array();
    for (const auto& [name, ok] : r.hypotheses) hyps.push_back(json{{"name", name}, {"holds", ok}});
    return json{{"construction", to_string(r.tag)},
                {"params", r.params},
                {"hypotheses", hyps},
                {"v", r.v},
                {"v_mod_n", r.v_mod_n},
                {"prediction_optimal", r.prediction}};
}

inline json to_json(const CodeFacts& f) {
    json j{{"p", f.p},
           {"m", f.m},
           {"n", f.n},
           {"v_input", f.v_input},
           {"v", f.v},
           {"coset_leader", f.coset_leader},
           {"coset_length", f.coset_length}};
    if (f.same_coset) {
        j["same_coset_as_u"] = true;
    } else {
        j["same_coset_as_u"] = false;
        j["dimension"] = f.dimension;
        j["generator"] = f.generator;
        j["distance"] = f.distance;
        j["optimal"] = f.optimal;
        j["bound_value"] = f.bound_value;
        j["bound_capacity"] = f.bound_capacity;
    }
    return j;
}

inline json to_json(const GeneratorHuntResult& h) {
    return json{{"target", h.target},
                {"v", h.v},
                {"moduli_tested", h.moduli_tested},
                {"matches", h.matches},
                {"closest_modulus", h.best_modulus},
                {"closest_generator", h.best_generator},
                {"closest_distance", h.best_distance}};
}

inline json to_json(const ExampleAuditRecord& r) {
    json claimed{{"p", r.p},
                 {"m", r.m},
                 {"v", r.v_printed},
                 {"n", r.claimed_params[0]},
                 {"k", r.claimed_params[1]},
                 {"d", r.claimed_params[2]},
                 {"generator", r.claimed_generator}};
    json computed = json::array();
    for (std::size_t i = 0; i < r.computed.size(); ++i) {
        json entry = to_json(r.computed[i]);
        entry["label"] = r.computed_labels[i];
        computed.push_back(entry);
    }
    json hunts = json::array();
    for (const auto& [label, hunt] : r.hunts) {
        json entry = to_json(hunt);
        entry["label"] = label;
        hunts.push_back(entry);
    }
    json j{{"example_id", r.example_id},
           {"claimed", claimed},
           {"computed", computed},
           {"status", r.status},
           {"notes", r.notes},
           {"hunts", hunts}};
    if (r.family_report) j["family"] = to_json(*r.family_report);
    return j;
}

inline json to_json(const SweepReport& r) {
    return json{{"p", r.p},
                {"m", r.m},
                {"n", r.n},
                {"candidates", r.candidates},
                {"qualified", r.qualified},
                {"qualified_vs", r.qualified_vs},
                {"confirmed_optimal", r.confirmed_optimal},
                {"counterexamples", r.counterexamples},
                {"remark_violations", r.remark_violations},
                {"reduction_violations", r.reduction_violations},
                {"length_lemma_anomalies", r.length_lemma_anomalies},
                {"passed", r.passed()}};
}

}  // namespace pcyclic
