#include <doctest.h>

#include "lyu/corpus.hpp"
#include "lyu/strands.hpp"
#include "test_util.hpp"

using namespace lyu;
using lyu::test::mono;
using lyu::test::sq;

namespace {

MonomialIdeal three_points() {
    return MonomialIdeal::from_gens(3, {sq(3, {1, 2}), sq(3, {1, 3}), sq(3, {2, 3})});
}

}  // namespace

TEST_SUITE_BEGIN("strands");

TEST_CASE("linear strand extraction") {
    FpField f2(2);
    auto rp2d = dual_ideal(corpus::rp2_ideal());
    auto minimal = prune_to_minimal(rooted_subcomplex(rp2d, f2));
    auto betti = betti_table(minimal);

    for (int r = 3; r <= 6; ++r) {
        auto s = linear_strand(minimal, r);
        for (std::size_t i = 0; i < s.ranks.size(); ++i)
            CHECK(s.ranks[i] == betti.beta(int(i), int(i) + r));
        for (auto& d : s.diffs)
            for (auto& row : d.row)
                for (auto& [c, ent] : row) CHECK(ent.m.degree() == 1);
    }

    RatField q;
    CHECK_THROWS_AS(linear_strand(taylor_complex(three_points(), q), 2), InputError);
}

TEST_CASE("nu tables of simple ideals") {
    auto q = FieldSpec::rationals();

    auto prime = MonomialIdeal::from_gens(
        3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
    auto tp = nu_table(prime, q);
    CHECK(tp.l == 1);
    CHECK(tp.entries == std::map<std::pair<int, int>, long>{{{0, 1}, 1}});
    CHECK(is_trivial_nu(tp));

    auto principal = MonomialIdeal::from_gens(2, {mono({2, 1})});
    auto tpr = nu_table(principal, q);
    CHECK(tpr.entries == std::map<std::pair<int, int>, long>{{{0, 3}, 1}});

    auto t3 = nu_table(three_points(), q);
    CHECK(t3.entries == std::map<std::pair<int, int>, long>{{{0, 2}, 1}});
    CHECK(t3.alternating_sum() == 1);
}

TEST_CASE("nu table of the dual projective plane depends on the characteristic") {
    auto rp2d = dual_ideal(corpus::rp2_ideal());

    auto t2 = nu_table(rp2d, FieldSpec::prime_field(2));
    CHECK(t2.l == 3);
    CHECK(t2.entries ==
          std::map<std::pair<int, int>, long>{{{0, 3}, 1}, {{1, 4}, 1}, {{2, 6}, 1}});
    CHECK(!is_trivial_nu(t2));

    auto t0 = nu_table(rp2d, FieldSpec::rationals());
    CHECK(is_trivial_nu(t0));
}

TEST_CASE("column sums and their triviality thresholds") {
    auto t2 = nu_table(dual_ideal(corpus::rp2_ideal()), FieldSpec::prime_field(2));
    auto cs = nu_column_sums(t2);
    REQUIRE(cs.sums.size() == 7);  // indices 0..nvars
    CHECK(cs.sums[0] == 1);
    CHECK(cs.sums[1] == 1);
    CHECK(cs.sums[2] == 1);
    CHECK(cs.sums[3] == 0);
    CHECK(!cs.nontrivial[0]);  // column 0 needs at least 2
    CHECK(cs.nontrivial[1]);
    CHECK(cs.nontrivial[2]);
    CHECK(cs.last_column_trivial);
}

TEST_CASE("consecutiveness checker on hand-built tables") {
    NuTable ok = nu_table(dual_ideal(corpus::rp2_ideal()), FieldSpec::prime_field(2));
    CHECK(check_nu_consecutiveness(ok).pass);

    NuTable isolated;
    isolated.l = 2;
    isolated.nvars = 4;
    isolated.set(0, 2, 1);
    isolated.set(2, 6, 1);
    auto rep = check_nu_consecutiveness(isolated);
    CHECK(!rep.pass);
    CHECK(rep.violating_index == 2);
    CHECK(rep.clause == "isolated nontrivial column");

    NuTable lonely_zero;
    lonely_zero.l = 2;
    lonely_zero.nvars = 4;
    lonely_zero.set(0, 2, 2);
    rep = check_nu_consecutiveness(lonely_zero);
    CHECK(!rep.pass);
    CHECK(rep.violating_index == 0);

    NuTable bad_tail;
    bad_tail.l = 1;
    bad_tail.nvars = 4;
    bad_tail.set(0, 1, 1);
    bad_tail.set(4, 5, 1);
    rep = check_nu_consecutiveness(bad_tail);
    CHECK(!rep.pass);
    CHECK(rep.clause == "nu_n must be trivial");
}

TEST_CASE("invariant checker rejects corrupted tables") {
    auto q = FieldSpec::rationals();
    auto t = nu_table(three_points(), q);
    auto betti = resolution_betti(three_points(), q);
    CHECK_NOTHROW(check_nu_invariants(t, betti));

    auto bumped = t;
    bumped.entries[{0, 2}] = 2;
    CHECK_THROWS_AS(check_nu_invariants(bumped, betti), PropertyViolation);

    auto negated = t;
    negated.entries[{0, 2}] = -1;
    CHECK_THROWS_AS(check_nu_invariants(negated, betti), PropertyViolation);
}

TEST_CASE("nu table is stable under adding unused variables") {
    auto k = FieldSpec::prime_field(2);
    for (auto& I : {three_points(), dual_ideal(corpus::rp2_ideal())})
        CHECK(nu_table(embed(I, I.nvars() + 2), k) == nu_table(I, k));
}

TEST_CASE("randomized rank mode reproduces the exact tables") {
    auto rp2d = dual_ideal(corpus::rp2_ideal());
    for (auto k : {FieldSpec::rationals(), FieldSpec::prime_field(2)}) {
        RankOptions opt;
        opt.mode = RankMode::randomized;
        opt.seed = 42;
        auto r = nu_table(rp2d, k, opt);
        CHECK(r == nu_table(rp2d, k));
        CHECK(!r.randomized_meta.empty());
        bool some_positive = false;
        for (auto& meta : r.randomized_meta) {
            CHECK(meta.trials == 3);
            // zero only for matrices without polynomial entries
            CHECK(meta.per_trial_failure_bound >= 0.0);
            CHECK(meta.per_trial_failure_bound < 1.0);
            some_positive = some_positive || meta.per_trial_failure_bound > 0.0;
        }
        CHECK(some_positive);
    }
}

TEST_CASE("componentwise linearity") {
    auto q = FieldSpec::rationals();
    auto f2 = FieldSpec::prime_field(2);

    auto r3 = is_componentwise_linear(three_points(), q);
    CHECK(r3.componentwise_linear);
    CHECK(r3.sweep_min == 2);
    CHECK(r3.sweep_max >= 3);

    auto stable = MonomialIdeal::from_gens(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
    CHECK(is_componentwise_linear(stable, q).componentwise_linear);

    auto rbad = is_componentwise_linear(dual_ideal(corpus::rp2_ideal()), f2);
    CHECK(!rbad.componentwise_linear);
    CHECK(rbad.failing_degree >= 3);

    // componentwise linear forces the trivial table
    CHECK(is_trivial_nu(nu_table(three_points(), q)));
    CHECK(is_trivial_nu(nu_table(stable, q)));
}

TEST_SUITE_END();
