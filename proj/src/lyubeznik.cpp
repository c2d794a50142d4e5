#include "lyu/lyubeznik.hpp"

#include <bit>

namespace lyu {

void check_lyubeznik_invariants(const LyubeznikTable& t) {
    const int d = t.d;
    for (auto& [pi, v] : t.entries) {
        if (v <= 0) throw PropertyViolation("nonpositive lambda entry stored");
        if (pi.first < 0 || pi.first > pi.second || pi.second > d)
            throw PropertyViolation("lambda supported outside the upper triangle");
    }
    if (t.lambda(d, d) == 0) throw PropertyViolation("lambda_{d,d} vanishes");
    if (t.euler_characteristic() != 1)
        throw PropertyViolation("lambda Euler characteristic is not 1");
    if (d >= 1 && t.lambda(0, d) != 0)
        throw PropertyViolation("lambda_{0,d} must vanish for d >= 1");
    if (d == 0 && t.lambda(0, 0) != 1)
        throw PropertyViolation("lambda_{0,0} must be 1 for d = 0");
    if (d >= 2 && t.lambda(1, d) != 0)
        throw PropertyViolation("lambda_{1,d} must vanish for d >= 2");
    if (t.lambda(1, 1) != (d == 1 ? 1 : 0))
        throw PropertyViolation("lambda_{1,1} must be 1 exactly when d = 1");
}

LyubeznikTable lyubeznik_table(const MonomialIdeal& input, const FieldSpec& k,
                               const RankOptions& opt, int generator_budget) {
    if (!input.is_proper_nonzero())
        throw InputError("Lyubeznik table needs a proper nonzero ideal");
    LyubeznikTable t;
    MonomialIdeal ideal = input;
    if (!ideal.is_squarefree()) {
        // local cohomology only sees the radical
        ideal = ideal.radical();
        t.radical_substituted = true;
    }
    const int n = ideal.nvars();
    SimplicialComplex delta = to_complex(ideal);
    int d = 0;
    for (auto f : delta.facets()) d = std::max(d, std::popcount(f));
    t.d = d;
    t.characteristic = k;

    NuTable nu = nu_table(dual_ideal(ideal), k, opt, generator_budget);
    for (auto& [ab, v] : nu.entries) {
        int p = n - ab.second;
        int i = ab.first + p;
        if (p < 0 || p > i || i > d)
            throw PropertyViolation("duality produced a lambda outside the upper triangle");
        t.set(p, i, v);
    }
    check_lyubeznik_invariants(t);
    return t;
}

RhoSums rho_sums(const LyubeznikTable& t) {
    RhoSums out;
    out.rho.assign(static_cast<std::size_t>(t.d) + 1, 0);
    for (auto& [pi, v] : t.entries) out.rho[pi.second - pi.first] += v;
    out.nontrivial.assign(out.rho.size(), false);
    for (std::size_t j = 0; j < out.rho.size(); ++j)
        out.nontrivial[j] = j == 0 ? out.rho[j] >= 2 : out.rho[j] >= 1;
    out.last_trivial = !out.nontrivial[t.d];
    return out;
}

bool is_trivial_lyubeznik(const LyubeznikTable& t) {
    return t.entries.size() == 1 && t.lambda(t.d, t.d) == 1;
}

ConsecutivenessReport check_lambda_consecutiveness(const LyubeznikTable& t) {
    ConsecutivenessReport rep;
    auto fail = [&rep](int idx, const char* clause) {
        rep.pass = false;
        rep.violating_index = idx;
        rep.clause = clause;
        return rep;
    };
    const int d = t.d;
    auto rs = rho_sums(t);
    auto nontrivial = [&](int j) { return j >= 0 && j <= d && rs.nontrivial[j]; };
    for (int j = 1; j < d; ++j)
        if (nontrivial(j) && !nontrivial(j - 1) && !nontrivial(j + 1))
            return fail(j, "isolated nontrivial superdiagonal");
    if (nontrivial(0) && !nontrivial(1)) return fail(0, "nontrivial rho_0 without nontrivial rho_1");
    if (!rs.last_trivial) return fail(d, "rho_d must be trivial");

    if (d == 2) {
        if (t.lambda(2, 2) - 1 != t.lambda(0, 1)) return fail(0, "d=2 identity lambda_22 - 1 = lambda_01");
        for (auto& [pi, v] : t.entries)
            if (!(pi == std::pair<int, int>{2, 2}) && !(pi == std::pair<int, int>{0, 1}))
                return fail(pi.first, "d=2 table supported outside {(0,1),(2,2)}");
    }
    if (d >= 3) {
        if (t.lambda(2, d) != t.lambda(0, d - 1)) return fail(2, "d>=3 identity lambda_{2,d} = lambda_{0,d-1}");
    }
    if (d >= 4) {
        // for d = 3 the chain degenerates (lambda_{3,d} is the corner entry,
        // always >= 1) and is replaced by the closed d = 3 identity below
        long a = t.lambda(1, d - 1), b = t.lambda(3, d);
        long c = t.lambda(0, d - 2), e = t.lambda(2, d - 1);
        if (!(a <= b && b <= a + c && a + c <= b + e))
            return fail(3, "d>=4 chained inequalities around lambda_{3,d}");
    }
    if (d == 3) {
        if (t.lambda(1, 2) + t.lambda(0, 1) != t.lambda(3, 3) + t.lambda(2, 2) - 1)
            return fail(1, "d=3 identity lambda_12 + lambda_01 = lambda_33 + lambda_22 - 1");
    }
    return rep;
}

long lambda_01_topological(const SimplicialComplex& delta) {
    int d = 0;
    for (auto f : delta.facets()) d = std::max(d, std::popcount(f));
    if (d < 2) return 0;
    return connected_components_nonisolated(delta) - 1;
}

long lambda_dd_topological(const SimplicialComplex& delta) {
    return codim_one_component_count(delta);
}

bool is_sequentially_cm(const MonomialIdeal& ideal, const FieldSpec& k, int degree_budget) {
    if (!ideal.is_squarefree())
        throw InputError("sequential Cohen-Macaulayness check needs a squarefree ideal");
    return is_componentwise_linear(dual_ideal(ideal), k, degree_budget).componentwise_linear;
}

}  // namespace lyu
