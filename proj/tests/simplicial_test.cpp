#include <doctest.h>

#include <bit>

#include "lyu/corpus.hpp"
#include "test_util.hpp"

using namespace lyu;
using lyu::test::face;

TEST_SUITE_BEGIN("simplicial");

TEST_CASE("construction normalizes facets") {
    bool dropped = false;
    auto d = SimplicialComplex::from_facets(3, {face({1}), face({1, 2})}, &dropped);
    CHECK(dropped);
    CHECK(d.facets() == std::vector<std::uint64_t>{face({1, 2})});
    CHECK(d.has_face(face({1})));
    CHECK(d.has_face(0));
    CHECK(!d.has_face(face({3})));

    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {face({3})}), InputError);
    CHECK(SimplicialComplex::empty_complex(4).dim() == -1);
    CHECK(SimplicialComplex::void_complex(4).is_void());
    CHECK_THROWS_AS(SimplicialComplex::void_complex(4).dim(), InputError);
}

TEST_CASE("alexander dual of three points is three points") {
    auto pts = SimplicialComplex::from_facets(3, {face({1}), face({2}), face({3})});
    CHECK(alexander_dual(pts) == pts);
}

TEST_CASE("alexander dual is an involution on all complexes with up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n, true))
            CHECK(alexander_dual(alexander_dual(d)) == d);
    CHECK(alexander_dual(SimplicialComplex::full_simplex(3)).is_void());
    CHECK(alexander_dual(SimplicialComplex::void_complex(3)).is_full_simplex());
}

TEST_CASE("dual of the projective plane triangulation has ten minimal nonfaces") {
    auto d = to_complex(corpus::rp2_ideal());
    REQUIRE(d.facets().size() == 10);
    auto dual = alexander_dual(d);
    auto nonfaces = dual.minimal_nonfaces();
    REQUIRE(nonfaces.size() == 10);
    // they are exactly the complements of the facets
    for (auto f : d.facets()) {
        bool found = false;
        for (auto nf : nonfaces) found = found || nf == (d.full_mask() & ~f);
        CHECK(found);
    }
}

TEST_CASE("restriction") {
    auto pts = SimplicialComplex::from_facets(3, {face({1}), face({2}), face({3})});
    CHECK(restriction(pts, 0).is_empty_complex());
    auto two = restriction(pts, face({1, 2}));
    CHECK(two.nvertices() == 2);
    CHECK(two.facets().size() == 2);

    auto rp2 = to_complex(corpus::rp2_ideal());
    for (auto f : rp2.facets()) CHECK(restriction(rp2, f).is_full_simplex());
}

TEST_CASE("reduced homology") {
    auto q = FieldSpec::rationals();
    auto f2 = FieldSpec::prime_field(2);

    CHECK(reduced_homology_dims(SimplicialComplex::empty_complex(2), q) ==
          std::vector<long>{1});

    auto circle = SimplicialComplex::from_facets(3, {face({1, 2}), face({1, 3}), face({2, 3})});
    for (auto k : {q, f2, FieldSpec::prime_field(3)})
        CHECK(reduced_homology_dims(circle, k) == std::vector<long>{0, 0, 1});

    auto rp2 = to_complex(corpus::rp2_ideal());
    CHECK(reduced_homology_dims(rp2, q) == std::vector<long>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, f2) == std::vector<long>{0, 0, 1, 1});
}

TEST_CASE("euler-poincare holds on the small corpus over both field kinds") {
    for (int n = 1; n <= 4; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n))
            for (long c : {0L, 2L}) {
                auto dims = reduced_homology_dims(d, FieldSpec::from_characteristic(c));
                long lhs = 0;
                for (std::size_t i = 0; i < dims.size(); ++i)
                    lhs += (i % 2 == 0 ? -dims[i] : dims[i]);  // index 0 is degree -1
                long rhs = -1;
                for (auto f : d.all_faces())
                    if (f != 0) rhs += (std::popcount(f) % 2 == 0 ? -1 : 1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("connected components without isolated points") {
    CHECK(connected_components_nonisolated(corpus::fig1_complex()) == 3);
    CHECK(connected_components_nonisolated(
              SimplicialComplex::from_facets(2, {face({1, 2})})) == 1);
    CHECK(connected_components_nonisolated(
              SimplicialComplex::from_facets(3, {face({1}), face({2}), face({3})})) == 0);
}

TEST_CASE("codimension-one facet components") {
    auto shared_edge = SimplicialComplex::from_facets(4, {face({1, 2, 3}), face({2, 3, 4})});
    CHECK(codim_one_component_count(shared_edge) == 1);
    auto shared_vertex = SimplicialComplex::from_facets(5, {face({1, 2, 3}), face({3, 4, 5})});
    CHECK(codim_one_component_count(shared_vertex) == 2);
    CHECK(codim_one_component_count(to_complex(corpus::rp2_ideal())) == 1);
    CHECK(codim_one_component_count(SimplicialComplex::empty_complex(2)) == 1);
    auto nonpure = SimplicialComplex::from_facets(3, {face({1, 2}), face({3})});
    CHECK_THROWS_AS(codim_one_component_count(nonpure), InputError);
}

TEST_CASE("barycentric subdivision") {
    auto segment = SimplicialComplex::from_facets(2, {face({1, 2})});
    auto path = barycentric_subdivision(segment);
    CHECK(path.nvertices() == 3);
    CHECK(path.facets().size() == 2);
    CHECK(path.dim() == 1);

    auto circle = SimplicialComplex::from_facets(3, {face({1, 2}), face({1, 3}), face({2, 3})});
    auto hexagon = barycentric_subdivision(circle);
    CHECK(hexagon.nvertices() == 6);
    CHECK(hexagon.facets().size() == 6);
    CHECK(reduced_homology_dims(hexagon, FieldSpec::rationals()) ==
          std::vector<long>{0, 0, 1});

    CHECK_THROWS_AS(barycentric_subdivision(circle, 5), BudgetError);
}

TEST_CASE("subdivision vertex count equals face count") {
    for (int n = 1; n <= 4; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n)) {
            if (d.is_empty_complex()) continue;
            SimplicialComplex sd = d;
            try {
                sd = barycentric_subdivision(d);
            } catch (const BudgetError&) {
                continue;
            }
            CHECK(static_cast<std::size_t>(sd.nvertices()) == d.all_faces().size() - 1);
        }
}

TEST_CASE("subdivision preserves homology") {
    for (int n = 1; n <= 4; ++n)
        for (auto& d : corpus::complexes_up_to_iso(n)) {
            if (d.is_empty_complex()) continue;
            SimplicialComplex sd = d;
            try {
                sd = barycentric_subdivision(d);
            } catch (const BudgetError&) {
                continue;
            }
            for (long c : {0L, 2L}) {
                auto k = FieldSpec::from_characteristic(c);
                CHECK(reduced_homology_dims(d, k) == reduced_homology_dims(sd, k));
            }
        }
}

TEST_SUITE_END();
