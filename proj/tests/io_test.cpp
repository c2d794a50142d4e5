#include <doctest.h>

#include "lyu/corpus.hpp"
#include "lyu/io.hpp"
#include "test_util.hpp"

using namespace lyu;
using lyu::test::face;
using lyu::test::mono;
using lyu::test::sq;

TEST_SUITE_BEGIN("io");

TEST_CASE("complex json round trip") {
    auto rp2 = to_complex(corpus::rp2_ideal());
    CHECK(io::complex_from_json(io::complex_to_json(rp2)) == rp2);

    auto empty = SimplicialComplex::empty_complex(3);
    CHECK(io::complex_from_json(io::complex_to_json(empty)) == empty);

    auto v = SimplicialComplex::void_complex(2);
    CHECK(io::complex_from_json(io::complex_to_json(v)).is_void());

    bool warned = false;
    auto j = io::json{{"n", 3}, {"facets", {{1}, {1, 2}}}};
    io::complex_from_json(j, &warned);
    CHECK(warned);

    CHECK_THROWS_AS(io::complex_from_json(io::json{{"n", 2}, {"facets", {{3}}}}), InputError);
    CHECK_THROWS_AS(io::complex_from_json(io::json::array()), InputError);
}

TEST_CASE("ideal json round trip") {
    for (auto& I : {corpus::rp2_ideal(), corpus::five_var_ideal(),
                    MonomialIdeal::from_gens(2, {mono({2, 1}), mono({0, 3})})})
        CHECK(io::ideal_from_json(io::ideal_to_json(I)) == I);

    CHECK(io::ideal_from_json(io::ideal_to_json(MonomialIdeal::zero_ideal(3))).is_zero());
    CHECK(io::ideal_from_json(io::json{{"n", 2}, {"gens", io::json::array()}}).is_zero());
    CHECK_THROWS_AS(io::ideal_from_json(io::json{{"n", 2}, {"gens", {{1}}}}), InputError);
}

TEST_CASE("table json round trips") {
    auto q = FieldSpec::rationals();
    auto f2 = FieldSpec::prime_field(2);
    auto rp2d = dual_ideal(corpus::rp2_ideal());

    auto betti = resolution_betti(rp2d, f2);
    CHECK(io::betti_from_json(io::betti_to_json(betti)) == betti);

    auto nu = nu_table(rp2d, f2);
    CHECK(io::nu_from_json(io::nu_to_json(nu)) == nu);

    for (auto k : {q, f2}) {
        auto lam = lyubeznik_table(corpus::rp2_ideal(), k);
        auto back = io::lyubeznik_from_json(io::lyubeznik_to_json(lam));
        CHECK(back == lam);
        CHECK(back.characteristic.characteristic == k.characteristic);
    }

    auto rad = lyubeznik_table(MonomialIdeal::from_gens(2, {mono({2, 1})}), q);
    CHECK(io::lyubeznik_from_json(io::lyubeznik_to_json(rad)).radical_substituted);

    // the coarse entries are cross-checked against the multigraded refinement
    auto j = io::betti_to_json(betti);
    j["entries"][0]["beta"] = 99;
    CHECK_THROWS_AS(io::betti_from_json(j), InputError);
}

TEST_CASE("text sniffing and parsing") {
    CHECK(io::sniff_text("1 2 3\n1 4\n") == io::TextKind::facets);
    CHECK(io::sniff_text("x1*x2\nx3^2\n") == io::TextKind::monomials);
    // comment lines never decide the kind
    CHECK(io::sniff_text("# facets below\n1 2\n") == io::TextKind::facets);
    CHECK(io::sniff_text("# gens below\nx1\n") == io::TextKind::monomials);

    auto d = io::complex_from_text("1 2 3\n2 3 4\n");
    CHECK(d == SimplicialComplex::from_facets(4, {face({1, 2, 3}), face({2, 3, 4})}));

    auto I = io::ideal_from_text("# comment\nx1*x2^2\nx3\n");
    CHECK(I == MonomialIdeal::from_gens(3, {mono({1, 2, 0}), mono({0, 0, 1})}));

    CHECK(io::parse_monomial("x1*x2^2", 3) == mono({1, 2, 0}));
    CHECK(io::parse_monomial("1", 2).is_one());
    CHECK_THROWS_AS(io::parse_monomial("y1", 2), InputError);
    CHECK_THROWS_AS(io::parse_monomial("x5", 2), InputError);
    CHECK_THROWS_AS(io::complex_from_text("", nullptr), InputError);
}

TEST_CASE("monomial text round trip through the parser") {
    auto rp2 = corpus::rp2_ideal();
    for (auto& g : rp2.gens()) CHECK(io::parse_monomial(g.str(), 6) == g);
    CHECK(io::parse_monomial(mono({0, 3, 1}).str(), 3) == mono({0, 3, 1}));
}

TEST_CASE("renderers") {
    auto f2 = FieldSpec::prime_field(2);
    auto rp2d = dual_ideal(corpus::rp2_ideal());

    auto nu = nu_table(rp2d, f2);
    auto text = io::nu_text(nu);
    CHECK(text.find("3:") != std::string::npos);  // strand row labels
    CHECK(text.find('.') != std::string::npos);   // structural zeros

    auto lam = lyubeznik_table(corpus::rp2_ideal(), f2);
    auto ltext = io::lyubeznik_text(lam);
    CHECK(ltext.find("0:") != std::string::npos);
    CHECK(io::lyubeznik_csv(lam) == "p,i,lambda\n0,2,1\n2,3,1\n3,3,1\n");

    CHECK(io::nu_csv(nu) == "i,j,nu\n0,3,1\n1,4,1\n2,6,1\n");
    auto bcsv = io::betti_csv(resolution_betti(rp2d, f2));
    CHECK(bcsv.substr(0, 9) == "i,j,beta\n");
    CHECK(io::nu_text(NuTable{}) == "(empty table)\n");
}

TEST_CASE("composition report json") {
    auto q = FieldSpec::rationals();
    auto p2 = MonomialIdeal::from_gens(1, {mono({2})});
    auto rep = verify_composition(p2, p2, q, CompositionMode::sum_nu);
    auto j = io::composition_report_to_json(rep);
    CHECK(j.at("mode") == "sum-nu");
    CHECK(j.at("status") == "match");
    CHECK(j.at("clause") == "convolution");
    CHECK(!j.contains("routes_agree"));

    auto plane = MonomialIdeal::from_gens(2, {mono({1, 0}), mono({0, 1})});
    auto irep = verify_composition(plane, plane, q, CompositionMode::intersection_lambda);
    auto ij = io::composition_report_to_json(irep);
    CHECK(ij.at("mode") == "intersection-lambda");
    CHECK(ij.at("routes_agree") == true);
    CHECK(ij.at("mismatches").empty());
}

TEST_SUITE_END();
