#include "lyu/compose.hpp"

#include <algorithm>

namespace lyu {

NuPrediction predict_nu_sum(const NuTable& nu_i, const NuTable& nu_j, bool i1_nonzero,
                            bool j1_nonzero, int l_i, int l_j) {
    NuPrediction out;
    out.table.nvars = nu_i.nvars + nu_j.nvars;
    out.table.l = std::min(l_i, l_j);
    if (i1_nonzero || j1_nonzero) {
        out.table.set(0, out.table.l, 1);
        out.provenance = "trivial: a factor has a degree-one generator";
        return out;
    }
    out.provenance = "convolution";
    for (auto& [ij, v] : nu_i.entries) out.table.entries[ij] += v;
    for (auto& [ij, v] : nu_j.entries) out.table.entries[ij] += v;
    // nu_{c,c+a}(I) * nu_{d,d+b}(J) contributes at i = c+d+1, j = i-1+a+b
    for (auto& [cca, vi] : nu_i.entries)
        for (auto& [ddb, vj] : nu_j.entries) {
            int c = cca.first, a = cca.second - c;
            int d = ddb.first, b = ddb.second - d;
            out.table.entries[{c + d + 1, c + d + a + b}] += vi * vj;
        }
    return out;
}

LambdaPrediction predict_lambda_intersection(const LyubeznikTable& lam_i, int m,
                                             const LyubeznikTable& lam_j, int n, int ht_i,
                                             int ht_j) {
    LambdaPrediction out;
    out.table.characteristic = lam_i.characteristic;
    out.table.d = std::max(lam_i.d + n, lam_j.d + m);
    if (ht_i == 1 || ht_j == 1) {
        out.table.set(out.table.d, out.table.d, 1);
        out.provenance = "trivial: a factor has height one";
        return out;
    }
    out.provenance = "convolution";
    for (auto& [pi, v] : lam_i.entries) out.table.entries[{pi.first + n, pi.second + n}] += v;
    for (auto& [pi, v] : lam_j.entries) out.table.entries[{pi.first + m, pi.second + m}] += v;
    for (auto& [qj, vi] : lam_i.entries)
        for (auto& [rk, vj] : lam_j.entries)
            out.table.entries[{qj.first + rk.first, qj.second + rk.second + 1}] += vi * vj;
    return out;
}

MonomialIdeal intersect_disjoint(const MonomialIdeal& a, const MonomialIdeal& b) {
    const int m = a.nvars(), n = b.nvars();
    MonomialIdeal ae = embed(a, m + n);
    std::vector<Monomial> shifted;
    for (auto& g : b.gens()) {
        Monomial e = Monomial::one(m + n);
        std::copy(g.e.begin(), g.e.end(), e.e.begin() + m);
        shifted.push_back(std::move(e));
    }
    MonomialIdeal be = b.is_proper_nonzero()
                           ? MonomialIdeal::from_gens(m + n, std::move(shifted))
                           : embed(b, m + n);
    return intersect(ae, be);
}

namespace {

template <class Map, class Out>
bool compare_entries(const Map& expected, const Map& actual, Out& mismatches) {
    bool match = true;
    auto record = [&](const std::pair<int, int>& key, long exp, long act) {
        if (exp == act) return;
        match = false;
        mismatches.push_back({key.first, key.second, exp, act});
    };
    for (auto& [key, v] : expected) {
        auto it = actual.find(key);
        record(key, v, it == actual.end() ? 0 : it->second);
    }
    for (auto& [key, v] : actual)
        if (expected.find(key) == expected.end()) record(key, 0, v);
    return match;
}

}  // namespace

CompositionReport verify_composition(const MonomialIdeal& a, const MonomialIdeal& b,
                                     const FieldSpec& k, CompositionMode mode,
                                     const RankOptions& opt, int generator_budget) {
    CompositionReport rep;
    rep.mode = mode;
    if (mode == CompositionMode::sum_nu) {
        NuTable nu_a = nu_table(a, k, opt, generator_budget);
        NuTable nu_b = nu_table(b, k, opt, generator_budget);
        auto pred = predict_nu_sum(nu_a, nu_b, a.min_gen_degree() == 1, b.min_gen_degree() == 1,
                                   a.min_gen_degree(), b.min_gen_degree());
        rep.clause = pred.provenance;
        NuTable direct = nu_table(sum_disjoint(a, b), k, opt, generator_budget);
        rep.match = compare_entries(pred.table.entries, direct.entries, rep.mismatches);
        if (pred.table.l != direct.l) rep.match = false;
        return rep;
    }
    LyubeznikTable lam_a = lyubeznik_table(a, k, opt, generator_budget);
    LyubeznikTable lam_b = lyubeznik_table(b, k, opt, generator_budget);
    auto pred = predict_lambda_intersection(lam_a, a.nvars(), lam_b, b.nvars(), height(a), height(b));
    rep.clause = pred.provenance;
    MonomialIdeal composed = intersect_disjoint(a, b);
    LyubeznikTable direct = lyubeznik_table(composed, k, opt, generator_budget);
    rep.match = compare_entries(pred.table.entries, direct.entries, rep.mismatches);
    if (pred.table.d != direct.d) rep.match = false;
    // independent construction: the dual of the intersection is the
    // disjoint-variable sum of the duals
    MonomialIdeal via_duals = sum_disjoint(dual_ideal(a), dual_ideal(b));
    rep.routes_agree = dual_ideal(composed).gens() == via_duals.gens();
    return rep;
}

}  // namespace lyu
