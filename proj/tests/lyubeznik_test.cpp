#include <doctest.h>

#include "lyu/corpus.hpp"
#include "lyu/lyubeznik.hpp"
#include "test_util.hpp"

using namespace lyu;
using lyu::test::face;
using lyu::test::mono;
using lyu::test::sq;

TEST_SUITE_BEGIN("lyubeznik");

TEST_CASE("projective plane tables in both characteristics") {
    auto rp2 = corpus::rp2_ideal();

    auto t0 = lyubeznik_table(rp2, FieldSpec::rationals());
    CHECK(t0.d == 3);
    CHECK(is_trivial_lyubeznik(t0));
    CHECK(t0.lambda(3, 3) == 1);

    auto t2 = lyubeznik_table(rp2, FieldSpec::prime_field(2));
    CHECK(t2.d == 3);
    CHECK(t2.entries ==
          std::map<std::pair<int, int>, long>{{{0, 2}, 1}, {{2, 3}, 1}, {{3, 3}, 1}});
    CHECK(!is_trivial_lyubeznik(t2));
    CHECK(t2.euler_characteristic() == 1);
}

TEST_CASE("a trivial table does not force sequential cohen-macaulayness") {
    auto five = corpus::five_var_ideal();
    auto q = FieldSpec::rationals();
    auto t = lyubeznik_table(five, q);
    CHECK(t.d == 3);
    CHECK(is_trivial_lyubeznik(t));
    CHECK(!is_sequentially_cm(five, q));
}

TEST_CASE("rho sums") {
    auto rs0 = rho_sums(lyubeznik_table(corpus::rp2_ideal(), FieldSpec::rationals()));
    CHECK(rs0.rho == std::vector<long>{1, 0, 0, 0});
    CHECK(!rs0.nontrivial[0]);
    CHECK(rs0.last_trivial);
    CHECK(rs0.alternating_sum() == 1);

    auto rs2 = rho_sums(lyubeznik_table(corpus::rp2_ideal(), FieldSpec::prime_field(2)));
    CHECK(rs2.rho == std::vector<long>{1, 1, 1, 0});

    auto rs22 = rho_sums(corpus::example22_table());
    CHECK(rs22.rho == std::vector<long>{1, 0, 1, 1, 0});
    CHECK(rs22.alternating_sum() == 1);
}

TEST_CASE("consecutiveness checker") {
    CHECK(check_lambda_consecutiveness(corpus::example22_table()).pass);
    CHECK(check_lambda_consecutiveness(
              lyubeznik_table(corpus::rp2_ideal(), FieldSpec::prime_field(2)))
              .pass);

    LyubeznikTable isolated;
    isolated.d = 3;
    isolated.set(1, 2, 1);
    isolated.set(3, 3, 1);
    auto rep = check_lambda_consecutiveness(isolated);
    CHECK(!rep.pass);
    CHECK(rep.violating_index == 1);
    CHECK(rep.clause == "isolated nontrivial superdiagonal");

    // d=2 tables live on the corner and lambda_01 only, tied together
    LyubeznikTable d2;
    d2.d = 2;
    d2.set(0, 1, 1);
    d2.set(2, 2, 2);
    CHECK(check_lambda_consecutiveness(d2).pass);
    d2.set(2, 2, 0);
    d2.entries[{2, 2}] = 3;
    CHECK(!check_lambda_consecutiveness(d2).pass);

    LyubeznikTable bad_corner;
    bad_corner.d = 4;
    bad_corner.set(4, 4, 2);  // rho_0 = 2 with everything else empty
    rep = check_lambda_consecutiveness(bad_corner);
    CHECK(!rep.pass);
    CHECK(rep.violating_index == 0);
}

TEST_CASE("structural invariants reject malformed tables") {
    CHECK_NOTHROW(check_lyubeznik_invariants(corpus::example22_table()));

    LyubeznikTable empty;
    empty.d = 2;
    CHECK_THROWS_AS(check_lyubeznik_invariants(empty), PropertyViolation);

    LyubeznikTable top_row;
    top_row.d = 2;
    top_row.set(2, 2, 1);
    top_row.set(0, 2, 1);
    top_row.set(1, 2, 0);
    CHECK_THROWS_AS(check_lyubeznik_invariants(top_row), PropertyViolation);

    LyubeznikTable outside;
    outside.d = 2;
    outside.set(2, 2, 1);
    outside.set(2, 1, 1);
    CHECK_THROWS_AS(check_lyubeznik_invariants(outside), PropertyViolation);
}

TEST_CASE("low dimensions") {
    // d = 0: the empty complex
    auto I0 = from_complex(SimplicialComplex::empty_complex(3));
    auto t0 = lyubeznik_table(I0, FieldSpec::rationals());
    CHECK(t0.d == 0);
    CHECK(t0.lambda(0, 0) == 1);
    CHECK(is_trivial_lyubeznik(t0));

    // d = 1: three isolated points
    auto I1 = MonomialIdeal::from_gens(3, {sq(3, {1, 2}), sq(3, {1, 3}), sq(3, {2, 3})});
    auto t1 = lyubeznik_table(I1, FieldSpec::rationals());
    CHECK(t1.d == 1);
    CHECK(t1.entries == std::map<std::pair<int, int>, long>{{{1, 1}, 1}});
}

TEST_CASE("non-squarefree input is replaced by its radical") {
    auto I = MonomialIdeal::from_gens(2, {mono({2, 1}), mono({0, 3})});
    auto t = lyubeznik_table(I, FieldSpec::rationals());
    CHECK(t.radical_substituted);
    CHECK(t == lyubeznik_table(MonomialIdeal::from_gens(2, {mono({0, 1})}),
                               FieldSpec::rationals()));
    CHECK(!lyubeznik_table(corpus::rp2_ideal(), FieldSpec::rationals()).radical_substituted);

    CHECK_THROWS_AS(lyubeznik_table(MonomialIdeal::zero_ideal(2), FieldSpec::rationals()),
                    InputError);
}

TEST_CASE("topological reads of the extreme entries") {
    CHECK(lambda_01_topological(corpus::fig1_complex()) == 2);
    auto t = lyubeznik_table(corpus::fig1_ideal(), FieldSpec::rationals());
    CHECK(t.d == 2);
    CHECK(t.lambda(0, 1) == 2);

    auto rp2c = to_complex(corpus::rp2_ideal());
    CHECK(lambda_dd_topological(rp2c) == 1);
    auto shared_vertex = SimplicialComplex::from_facets(5, {face({1, 2, 3}), face({3, 4, 5})});
    CHECK(lambda_dd_topological(shared_vertex) == 2);
    CHECK(lyubeznik_table(from_complex(shared_vertex), FieldSpec::rationals()).lambda(3, 3) == 2);

    // a 1-dimensional complex contributes nothing to lambda_01
    CHECK(lambda_01_topological(SimplicialComplex::from_facets(2, {face({1, 2})})) == 0);
}

TEST_CASE("sequential cohen-macaulayness") {
    auto q = FieldSpec::rationals();
    CHECK(is_sequentially_cm(MonomialIdeal::from_gens(2, {sq(2, {1, 2})}), q));
    CHECK(is_sequentially_cm(corpus::rp2_ideal(), q));
    CHECK(!is_sequentially_cm(corpus::rp2_ideal(), FieldSpec::prime_field(2)));
    CHECK_THROWS_AS(is_sequentially_cm(MonomialIdeal::from_gens(1, {mono({2})}), q), InputError);
}

TEST_SUITE_END();
