#include "lyu/strands.hpp"

namespace lyu {

namespace {

template <class F>
BettiTable betti_via(const MonomialIdeal& ideal, F field, int generator_budget) {
    return betti_table(prune_to_minimal(taylor_complex(ideal, std::move(field), generator_budget)));
}

}  // namespace

void check_nu_invariants(const NuTable& t, const BettiTable& betti) {
    for (auto& [ij, v] : t.entries) {
        if (v < 0) throw PropertyViolation("negative nu entry");
        if (v > betti.beta(ij.first, ij.second))
            throw PropertyViolation("nu exceeds the Betti number at (" +
                                    std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
    if (t.alternating_sum() != 1)
        throw PropertyViolation("nu alternating sum is not 1");
    if (t.nu(0, t.l) < 1) throw PropertyViolation("nu_{0,l} vanishes");
    // per-strand alternating sums must match the Betti ones
    std::map<int, long> nu_strand, beta_strand;
    for (auto& [ij, v] : t.entries)
        nu_strand[ij.second - ij.first] += (ij.first % 2 == 0 ? v : -v);
    for (auto& [ij, b] : betti.by_ij)
        beta_strand[ij.second - ij.first] += (ij.first % 2 == 0 ? b : -b);
    for (auto& [r, s] : beta_strand)
        if (nu_strand[r] != s)
            throw PropertyViolation("strand alternating sum mismatch at offset " + std::to_string(r));
    for (auto& [r, s] : nu_strand)
        if (s != 0 && beta_strand.find(r) == beta_strand.end())
            throw PropertyViolation("nu entry in an empty strand at offset " + std::to_string(r));
}

NuTable nu_table(const MonomialIdeal& ideal, const FieldSpec& k, const RankOptions& opt,
                 int generator_budget) {
    if (k.is_rationals()) return nu_table_impl(ideal, RatField{}, opt, generator_budget);
    return nu_table_impl(ideal, FpField(static_cast<std::uint64_t>(k.characteristic)), opt,
                         generator_budget);
}

BettiTable resolution_betti(const MonomialIdeal& ideal, const FieldSpec& k, int generator_budget) {
    if (k.is_rationals()) return betti_via(ideal, RatField{}, generator_budget);
    return betti_via(ideal, FpField(static_cast<std::uint64_t>(k.characteristic)), generator_budget);
}

bool is_trivial_nu(const NuTable& t) {
    return t.entries.size() == 1 && t.nu(0, t.l) == 1;
}

NuColumnSums nu_column_sums(const NuTable& t) {
    NuColumnSums out;
    out.sums.assign(static_cast<std::size_t>(t.nvars) + 1, 0);
    for (auto& [ij, v] : t.entries) {
        if (ij.first >= static_cast<int>(out.sums.size()))
            out.sums.resize(static_cast<std::size_t>(ij.first) + 1, 0);
        out.sums[ij.first] += v;
    }
    out.nontrivial.assign(out.sums.size(), false);
    for (std::size_t i = 0; i < out.sums.size(); ++i)
        out.nontrivial[i] = i == 0 ? out.sums[i] >= 2 : out.sums[i] >= 1;
    out.last_column_trivial =
        t.nvars < static_cast<int>(out.sums.size()) ? out.sums[t.nvars] == 0 : true;
    return out;
}

ConsecutivenessReport check_nu_consecutiveness(const NuTable& t) {
    auto cs = nu_column_sums(t);
    ConsecutivenessReport rep;
    auto nontrivial = [&](int i) {
        return i >= 0 && i < static_cast<int>(cs.nontrivial.size()) && cs.nontrivial[i];
    };
    if (nontrivial(0) && !nontrivial(1)) {
        rep.pass = false;
        rep.violating_index = 0;
        rep.clause = "nontrivial nu_0 without nontrivial nu_1";
        return rep;
    }
    for (int j = 1; j < static_cast<int>(cs.nontrivial.size()) - 1; ++j) {
        if (nontrivial(j) && !nontrivial(j - 1) && !nontrivial(j + 1)) {
            rep.pass = false;
            rep.violating_index = j;
            rep.clause = "isolated nontrivial column";
            return rep;
        }
    }
    if (!cs.last_column_trivial) {
        rep.pass = false;
        rep.violating_index = t.nvars;
        rep.clause = "nu_n must be trivial";
        return rep;
    }
    return rep;
}

ComponentwiseLinearReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& k,
                                                  int degree_budget) {
    if (!ideal.is_proper_nonzero())
        throw InputError("componentwise linearity needs a proper nonzero ideal");
    ComponentwiseLinearReport rep;
    // sweep up to the regularity bound: past the largest total degree in the
    // minimal resolution every component is automatically linear
    BettiTable base = koszul_betti(ideal, k);
    rep.sweep_min = ideal.min_gen_degree();
    rep.sweep_max = base.max_total_degree();
    rep.componentwise_linear = true;
    for (int r = rep.sweep_min; r <= rep.sweep_max; ++r) {
        MonomialIdeal comp = degree_component(ideal, r, degree_budget);
        if (comp.is_zero()) continue;
        BettiTable bt = koszul_betti(comp, k);
        for (auto& [ij, b] : bt.by_ij)
            if (b != 0 && ij.second != ij.first + r) {
                rep.componentwise_linear = false;
                rep.failing_degree = r;
                return rep;
            }
    }
    return rep;
}

}  // namespace lyu
