#include <doctest.h>

#include "lyu/corpus.hpp"
#include "test_util.hpp"

using namespace lyu;
using lyu::test::face;
using lyu::test::mono;
using lyu::test::sq;

TEST_SUITE_BEGIN("monomial");

TEST_CASE("monomial basics") {
    auto m = mono({1, 2, 0});
    CHECK(m.degree() == 3);
    CHECK(!m.is_squarefree());
    CHECK(m.str() == "x1*x2^2");
    CHECK(Monomial::one(3).str() == "1");
    CHECK(mono({1, 0, 0}).divides(m));
    CHECK(!mono({0, 0, 1}).divides(m));
    CHECK(Monomial::lcm(mono({1, 2, 0}), mono({0, 1, 3})) == mono({1, 2, 3}));
    CHECK(m.quotient(mono({1, 1, 0})) == mono({0, 1, 0}));
    CHECK(m.support_mask() == face({1, 2}));
}

TEST_CASE("minimal generating sets") {
    auto I = MonomialIdeal::from_gens(2, {mono({1, 0}), mono({1, 1}), mono({0, 2})});
    CHECK(I.gens() == std::vector<Monomial>{mono({1, 0}), mono({0, 2})});
    CHECK(I.contains(mono({3, 5})));
    CHECK(!I.contains(mono({0, 1})));
    CHECK(I.min_gen_degree() == 1);
    CHECK(I.max_gen_degree() == 2);

    CHECK(MonomialIdeal::from_gens(2, {Monomial::one(2)}).is_unit());
    CHECK(MonomialIdeal::zero_ideal(2).is_zero());
}

TEST_CASE("stanley-reisner correspondence") {
    auto pts = SimplicialComplex::from_facets(3, {face({1}), face({2}), face({3})});
    auto I = from_complex(pts);
    CHECK(I.gens() == std::vector<Monomial>{sq(3, {2, 3}), sq(3, {1, 3}), sq(3, {1, 2})});
    CHECK(to_complex(I) == pts);

    // boundary of the simplex: the only nonface is the full vertex set
    auto bd = SimplicialComplex::from_facets(
        4, {face({1, 2, 3}), face({1, 2, 4}), face({1, 3, 4}), face({2, 3, 4})});
    CHECK(from_complex(bd).gens() == std::vector<Monomial>{sq(4, {1, 2, 3, 4})});

    CHECK_THROWS_AS(from_complex(SimplicialComplex::full_simplex(3)), InputError);
    CHECK_THROWS_AS(to_complex(MonomialIdeal::from_gens(2, {mono({2, 0})})), InputError);
}

TEST_CASE("round trip on every complex with up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n)) {
            auto I = from_complex(d);
            CHECK(to_complex(I) == d);
            CHECK(from_complex(to_complex(I)) == I);
        }
}

TEST_CASE("alexander dual ideal") {
    auto tri = MonomialIdeal::from_gens(3, {sq(3, {1, 2}), sq(3, {1, 3}), sq(3, {2, 3})});
    CHECK(dual_ideal(tri) == tri);

    auto edge = MonomialIdeal::from_gens(2, {sq(2, {1, 2})});
    CHECK(dual_ideal(edge).gens() == std::vector<Monomial>{mono({0, 1}), mono({1, 0})});

    auto rp2d = dual_ideal(corpus::rp2_ideal());
    CHECK(rp2d.gens().size() == 10);
    for (auto& g : rp2d.gens()) CHECK(g.degree() == 3);
    CHECK(dual_ideal(rp2d) == corpus::rp2_ideal());

    CHECK(dual_ideal(MonomialIdeal::from_gens(1, {mono({1})})).gens().size() == 1);
    CHECK_THROWS_AS(dual_ideal(MonomialIdeal::from_gens(2, {mono({2, 0})})), InputError);
}

TEST_CASE("dual ideal matches the complex-level dual") {
    for (int n = 2; n <= 4; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n)) {
            auto I = from_complex(d);
            if (alexander_dual(d).is_void()) continue;
            CHECK(dual_ideal(I) == from_complex(alexander_dual(d)));
        }
}

TEST_CASE("intersection") {
    auto a = MonomialIdeal::from_gens(2, {mono({1, 0})});
    auto b = MonomialIdeal::from_gens(2, {mono({0, 1})});
    CHECK(intersect(a, b).gens() == std::vector<Monomial>{sq(2, {1, 2})});
    CHECK(intersect(a, a) == a);

    auto five = corpus::five_var_ideal();
    CHECK(five.nvars() == 5);
    CHECK(five.is_squarefree());
    // membership: in the intersection iff in every prime factor
    CHECK(five.contains(sq(5, {1, 3, 5})));
    CHECK(!five.contains(sq(5, {1, 3})));  // misses (x2, x5)
}

TEST_CASE("disjoint sums") {
    auto a = MonomialIdeal::from_gens(1, {mono({1})});
    auto s = sum_disjoint(a, a);
    CHECK(s.nvars() == 2);
    CHECK(s.gens() == std::vector<Monomial>{mono({0, 1}), mono({1, 0})});

    auto rp2 = corpus::rp2_ideal();
    CHECK(sum_disjoint(rp2, rp2).gens().size() == 20);
    CHECK(sum_disjoint(rp2, rp2).nvars() == 12);
}

TEST_CASE("degree components") {
    auto x1 = MonomialIdeal::from_gens(2, {mono({1, 0})});
    CHECK(degree_component(x1, 2).gens() ==
          std::vector<Monomial>{mono({1, 1}), mono({2, 0})});

    auto tri = MonomialIdeal::from_gens(3, {sq(3, {1, 2}), sq(3, {1, 3}), sq(3, {2, 3})});
    CHECK(degree_component(tri, 2) == tri);

    auto mixed = MonomialIdeal::from_gens(3, {mono({1, 0, 0}), sq(3, {2, 3})});
    CHECK(degree_component(mixed, 1).gens() == std::vector<Monomial>{mono({1, 0, 0})});

    CHECK(degree_component(MonomialIdeal::from_gens(2, {sq(2, {1, 2})}), 1).is_zero());
}

TEST_CASE("height") {
    CHECK(height(MonomialIdeal::from_gens(2, {sq(2, {1, 2})})) == 1);
    CHECK(height(MonomialIdeal::from_gens(2, {mono({1, 0}), mono({0, 1})})) == 2);
    CHECK(height(corpus::rp2_ideal()) == 3);
    // height 1 exactly when the dual has a linear generator
    for (int n = 2; n <= 4; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n)) {
            auto I = from_complex(d);
            if (!I.is_proper_nonzero() || alexander_dual(d).is_void()) continue;
            CHECK((height(I) == 1) == (dual_ideal(I).min_gen_degree() == 1));
        }
}

TEST_CASE("radical and embedding") {
    auto I = MonomialIdeal::from_gens(2, {mono({2, 1}), mono({0, 3})});
    CHECK(I.radical().gens() == std::vector<Monomial>{mono({0, 1})});

    auto e = embed(MonomialIdeal::from_gens(2, {sq(2, {1, 2})}), 4);
    CHECK(e.nvars() == 4);
    CHECK(e.gens() == std::vector<Monomial>{mono({1, 1, 0, 0})});
}

TEST_SUITE_END();
