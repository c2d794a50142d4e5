#ifndef LYU_LYUBEZNIK_HPP
#define LYU_LYUBEZNIK_HPP

#include <map>
#include <string>
#include <vector>

#include "lyu/strands.hpp"

namespace lyu {

// Upper-triangular table of Lyubeznik numbers lambda_{p,i}, 0 <= p <= i <= d,
// where d is the Krull dimension of the Stanley-Reisner ring.
struct LyubeznikTable {
    int d = 0;
    FieldSpec characteristic;
    std::map<std::pair<int, int>, long> entries;  // (p, i) -> lambda, zeros absent
    bool radical_substituted = false;  // input was not squarefree; its radical was used

    long lambda(int p, int i) const {
        auto it = entries.find({p, i});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int p, int i, long v) {
        if (v != 0) entries[{p, i}] = v;
    }
    long euler_characteristic() const {
        long s = 0;
        for (auto& [pi, v] : entries) s += ((pi.second - pi.first) % 2 == 0 ? v : -v);
        return s;
    }
    bool operator==(const LyubeznikTable& o) const { return d == o.d && entries == o.entries; }
};

// asserts the structural table invariants; throws PropertyViolation
void check_lyubeznik_invariants(const LyubeznikTable& t);

// duality route: lambda_{p,i}(R/I) = nu_{i-p, n-p} of the Alexander dual ideal.
// Non-squarefree input is replaced by its radical (flagged in the result).
LyubeznikTable lyubeznik_table(const MonomialIdeal& ideal, const FieldSpec& k,
                               const RankOptions& opt = {}, int generator_budget = 20);

struct RhoSums {
    std::vector<long> rho;            // rho[j] = sum_i lambda_{i,i+j}, j = 0..d
    std::vector<bool> nontrivial;     // rho_0 nontrivial iff >= 2; rho_j, j>=1, iff >= 1
    bool last_trivial = true;         // rho_d is always trivial
    long alternating_sum() const {
        long s = 0;
        for (std::size_t j = 0; j < rho.size(); ++j) s += (j % 2 == 0 ? rho[j] : -rho[j]);
        return s;
    }
};
RhoSums rho_sums(const LyubeznikTable& t);

bool is_trivial_lyubeznik(const LyubeznikTable& t);

// superdiagonal consecutiveness plus the closed low-dimension identities
ConsecutivenessReport check_lambda_consecutiveness(const LyubeznikTable& t);

// lambda_{0,1} from connectivity: components of the complex minus isolated
// points, less one, valid when dim R/I >= 2; otherwise 0.
long lambda_01_topological(const SimplicialComplex& delta);

// lambda_{d,d} from the facet adjacency graph; pure complexes only.
long lambda_dd_topological(const SimplicialComplex& delta);

// Herzog-Hibi: sequentially Cohen-Macaulay iff the dual ideal is
// componentwise linear.
bool is_sequentially_cm(const MonomialIdeal& ideal, const FieldSpec& k, int degree_budget = 12);

}  // namespace lyu

#endif
