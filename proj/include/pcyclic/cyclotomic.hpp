#pragma once

// p-cyclotomic cosets modulo n: the orbit partition of Z_n under
// multiplication by p.  Members are kept in orbit order (j, pj, p^2 j, ...)
// because that is the order minimal-polynomial conjugate products consume.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pcyclic/prime_field.hpp"

namespace pcyclic {

class CosetTable {
  public:
    CosetTable(std::int64_t p, std::int64_t n) : p_(p), n_(n) {
        if (n < 1) throw std::invalid_argument("CosetTable: n must be >= 1");
        if (n % p == 0) throw std::invalid_argument("CosetTable: p must not divide n");
        leader_of_.assign(n, -1);
        for (std::int64_t j = 0; j < n_; ++j) {
            if (leader_of_[j] != -1) continue;
            std::vector<std::int64_t> orbit;
            std::int64_t cur = j;
            std::int64_t leader = j;
            do {
                orbit.push_back(cur);
                if (cur < leader) leader = cur;
                cur = static_cast<std::int64_t>(__int128(cur) * p_ % n_);
            } while (cur != j);
            // j is the smallest unvisited residue, so it is the leader
            for (std::int64_t member : orbit) leader_of_[member] = j;
            cosets_.emplace(j, std::move(orbit));
        }
    }

    std::int64_t p() const { return p_; }
    std::int64_t n() const { return n_; }

    std::int64_t leader(std::int64_t j) const {
        check_range(j);
        return leader_of_[j];
    }

    const std::vector<std::int64_t>& members(std::int64_t j) const {
        check_range(j);
        return cosets_.at(leader_of_[j]);
    }

    std::int64_t length(std::int64_t j) const {
        return static_cast<std::int64_t>(members(j).size());
    }

    std::vector<std::int64_t> leaders() const {
        std::vector<std::int64_t> out;
        out.reserve(cosets_.size());
        for (const auto& [l, mem] : cosets_) out.push_back(l);
        return out;  // std::map iteration: ascending
    }

    bool same_coset(std::int64_t a, std::int64_t b) const {
        return leader(a) == leader(b);
    }

  private:
    void check_range(std::int64_t j) const {
        if (j < 0 || j >= n_) throw std::out_of_range("CosetTable: residue out of range");
    }

    std::int64_t p_, n_;
    std::vector<std::int64_t> leader_of_;
    std::map<std::int64_t, std::vector<std::int64_t>> cosets_;
};

inline CosetTable build_cosets(std::int64_t p, std::int64_t n) { return CosetTable(p, n); }

// Sufficient condition from the classical coset-length lemma: for
// 1 <= gcd(j, n) <= 2(p+1) the coset length should equal m (the order of p
// mod n).  A residue where the prediction fails is an anomaly worth
// reporting upstream; it is not an arithmetic error in the table.
struct CosetLengthCheck {
    bool applicable = false;  // gcd(j, n) within [1, 2(p+1)]
    bool holds = true;        // length == m whenever applicable
    std::int64_t gcd_jn = 0;
    std::int64_t length = 0;
};

inline CosetLengthCheck check_length_lemma(const CosetTable& table, std::int64_t m,
                                           std::int64_t j) {
    CosetLengthCheck r;
    r.gcd_jn = gcd_i64(j, table.n());
    if (r.gcd_jn == 0) r.gcd_jn = table.n();  // j == 0
    r.length = table.length(j);
    r.applicable = r.gcd_jn >= 1 && r.gcd_jn <= 2 * (table.p() + 1);
    r.holds = !r.applicable || r.length == m;
    return r;
}

inline std::vector<std::int64_t> coset_length_anomalies(const CosetTable& table,
                                                        std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t l : table.leaders()) {
        auto c = check_length_lemma(table, m, l);
        if (c.applicable && !c.holds) out.push_back(l);
    }
    return out;
}

}  // namespace pcyclic
