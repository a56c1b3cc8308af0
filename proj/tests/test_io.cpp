#include "doctest.h"

#include <string>

#include "detlab/degeneration.hpp"
#include "detlab/errors.hpp"
#include "detlab/json_io.hpp"
#include "detlab/oracle_compose.hpp"
#include "detlab/pfaffian.hpp"
#include "detlab/straighten.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;

TEST_CASE("rationals serialize in canonical lowest terms") {
    CHECK(rat_to_json(Rat(3, 4)) == Json("3/4"));
    CHECK(rat_to_json(Rat(6, 8)) == Json("3/4"));
    CHECK(rat_to_json(Rat(5)) == Json("5"));
    CHECK(rat_to_json(Rat(-7, 2)) == Json("-7/2"));

    CHECK(rat_from_json(Json("3/4")) == Rat(3, 4));
    CHECK(rat_from_json(Json("-12")) == Rat(-12));
    CHECK_THROWS_AS(rat_from_json(Json(3)), ParseError);
    CHECK_THROWS_AS(rat_from_json(Json("three")), ParseError);
}

TEST_CASE("eps coefficients and monomials round trip") {
    const EpsScalar c = EpsScalar::eps(-1, Rat(1, 2)) + EpsScalar::eps(2, Rat(3));
    CHECK(eps_to_json(c).dump() == R"({"-1":"1/2","2":"3"})");
    CHECK(eps_from_json(eps_to_json(c)) == c);
    CHECK_THROWS_AS(eps_from_json(Json::parse(R"({"two":"3"})")), ParseError);
    CHECK_THROWS_AS(eps_from_json(Json::parse(R"([1])")), ParseError);

    const Monomial m = Monomial::from_factors({{vx(1, 2), 2}, {vy({3}), 1}});
    CHECK(mono_to_json(m).dump() == R"({"x[1,2]":2,"y[3]":1})");
    CHECK(mono_from_json(mono_to_json(m)) == m);
    CHECK_THROWS_AS(mono_from_json(Json::parse(R"({"x[1,2]":-1})")), ParseError);
    CHECK_THROWS_AS(mono_from_json(Json::parse(R"({"q[1]":1})")), ParseError);
}

TEST_CASE("polynomials have a stable term layout") {
    const Poly f = Poly(2) + X(1, 1);
    CHECK(poly_to_json(f).dump() ==
          R"({"terms":[{"coef":{"0":"2"},"mono":{}},{"coef":{"0":"1"},"mono":{"x[1,1]":1}}]})");
    CHECK(poly_from_json(poly_to_json(f)) == f);

    const Poly det3 = testing::det_n(3);
    CHECK(poly_from_json(poly_to_json(det3)) == det3);
    const Poly with_eps = X(1, 1).scaled(EpsScalar::eps(-2)) + X(2, 2);
    CHECK(poly_from_json(poly_to_json(with_eps)) == with_eps);

    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"no_terms":[]})")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":{}})")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[{"mono":{}}]})")), ParseError);
}

TEST_CASE("dump is stable and parse rejects junk") {
    CHECK(dump_json(Json::object()) == "{}\n");
    Json j = Json::object();
    j["a"] = 1;
    CHECK(dump_json(j) == "{\n  \"a\": 1\n}\n");
    CHECK(parse_json_text(dump_json(j)) == j);
    CHECK_THROWS_AS(parse_json_text("definitely not json"), ParseError);
    CHECK_THROWS_AS(parse_json_text("{\"open\":"), ParseError);
}

TEST_CASE("shape types round trip and validate through their constructors") {
    const Partition p({3, 2});
    CHECK(partition_to_json(p).dump() == "[3,2]");
    CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[2,3]")), ShapeOutOfBounds);

    const Tableau t({{1, 2, 4}, {2, 3}});
    CHECK(tableau_to_json(t).dump() == "[[1,2,4],[2,3]]");
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
    CHECK_THROWS_AS(tableau_from_json(Json::parse("[[1],[2,3]]")), ShapeOutOfBounds);
    CHECK_THROWS_AS(tableau_from_json(Json::parse("[[0]]")), EntryOutOfBounds);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"([["a"]])")), ParseError);

    const Bitableau b{Tableau({{1, 2}}), Tableau({{1, 3}})};
    CHECK(bitableau_to_json(b).dump() == R"({"S":[[1,2]],"T":[[1,3]]})");
    const Bitableau back = bitableau_from_json(bitableau_to_json(b));
    CHECK(back.S == b.S);
    CHECK(back.T == b.T);
}

TEST_CASE("straightening output serializes in emission order") {
    const BidetExpr e = straighten(X(1, 2) * X(2, 1));
    const Json j = bidet_to_json(e);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["S"].dump() == "[[1,2]]");
    CHECK(j["terms"][0]["coef"].dump() == R"({"0":"-1"})");
    CHECK(j["terms"][1]["S"].dump() == "[[1],[2]]");

    const StdMonExpr s = pfaff_straighten(Poly::var(vx(1, 4)) * Poly::var(vx(2, 3)));
    const Json js = stdmon_to_json(s);
    for (const Json& term : js["terms"]) {
        CHECK(term.contains("coef"));
        CHECK(term.contains("tableau"));
    }
}

TEST_CASE("matrices of rationals and polynomials round trip") {
    const QMatrix q = {{Rat(1, 2), Rat(3)}, {Rat(0), Rat(-5, 7)}};
    CHECK(qmatrix_from_json(qmatrix_to_json(q)) == q);
    CHECK(qmatrix_to_json(q).dump() == R"([["1/2","3"],["0","-5/7"]])");

    const PolyMatrix pm = {{X(1, 1), Poly()}, {Poly(3), testing::det_n(2)}};
    const PolyMatrix back = poly_matrix_from_json(poly_matrix_to_json(pm));
    REQUIRE(back.size() == 2);
    CHECK(back[0][0] == pm[0][0]);
    CHECK(back[1][1] == pm[1][1]);
    CHECK_THROWS_AS(qmatrix_from_json(Json::parse("{}")), ParseError);
}

TEST_CASE("skew matrices store only the upper triangle") {
    const SkewContext ctx(4);
    const PolyMatrix m = ctx.matrix();
    const Json j = skew_to_json(m);
    CHECK(j["size"] == 4);
    CHECK(j["entries"].size() == 6);

    const PolyMatrix back = skew_from_json(j);
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(back[i][i].is_zero());
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(back[i][k] == m[i][k]);
            CHECK(back[i][k] == -back[k][i]);
        }
    }

    SUBCASE("zero entries are omitted") {
        PolyMatrix sparse = m;
        sparse[0][1] = Poly();
        sparse[1][0] = Poly();
        CHECK(skew_to_json(sparse)["entries"].size() == 5);
    }

    SUBCASE("entry coordinates are validated") {
        CHECK_THROWS_AS(
            skew_from_json(Json::parse(
                R"({"size":2,"entries":[{"i":2,"j":1,"value":{"terms":[]}}]})")),
            ParseError);
        CHECK_THROWS_AS(
            skew_from_json(Json::parse(
                R"({"size":2,"entries":[{"i":1,"j":3,"value":{"terms":[]}}]})")),
            ParseError);
        CHECK_THROWS_AS(skew_from_json(Json::parse(R"({"size":-1,"entries":[]})")),
                        ParseError);
    }
}

TEST_CASE("layered programs round trip byte-identically") {
    const LayeredABP p = testing::diamond_abp();
    const Json j = abp_to_json(p);
    const LayeredABP back = abp_from_json(j);
    CHECK(back.vertex_count() == p.vertex_count());
    CHECK(eval_abp(back) == eval_abp(p));
    CHECK(dump_json(abp_to_json(back)) == dump_json(j));

    CHECK_THROWS_AS(abp_from_json(Json::parse(R"({"layers":[["s"]]})")), ParseError);
    CHECK_THROWS_AS(
        abp_from_json(Json::parse(
            R"({"layers":[["s"],["t"]],"edges":[{"from":"s","to":"t"}]})")),
        ParseError);
}

TEST_CASE("derived reports expose their schemas") {
    SUBCASE("oracle circuit") {
        const DepthThreeOracleCircuit c =
            compose_projection(testing::det_n(3), 3, testing::path_abp());
        const Json j = circuit_to_json(c);
        for (const char* key : {"n", "m", "bottom", "oracle", "c0", "c1", "transcript"})
            CHECK(j.contains(key));
        CHECK(j["transcript"]["N"].get<int>() >= 1);
        CHECK(poly_from_json(j["oracle"]) == testing::det_n(3));
    }

    SUBCASE("reduction transcript") {
        const ReductionResult rr = reduce_to_single_bideterminant(testing::det_n(2), 2);
        const Json j = reduction_to_json(rr);
        for (const char* key : {"substitution", "q", "alpha", "sigma", "slice"})
            CHECK(j.contains(key));
        CHECK(rat_from_json(j["alpha"]) == rr.alpha);
        CHECK(poly_from_json(j["slice"]) == rr.slice);
        CHECK(j["substitution"]["forms"].is_array());
    }

    SUBCASE("vanishing report") {
        const Json j = vanishing_to_json(vanishing_equivalence(testing::det_n(2), 2));
        CHECK(j["composition_zero"] == true);
        CHECK(j["in_ideal"] == true);
        CHECK(j["n"] == 2);
    }

    SUBCASE("recursive generator") {
        const Json j = recursive_to_json(recursive_generator(2, 1, {1}));
        CHECK(j["degree"] == 2);
        CHECK(j["stages"].size() == 1);
        CHECK(j["coordinates"].size() == 2);
    }
}

TEST_CASE("generators and condensers round trip") {
    const MatrixGenerator g(3, 2, 2);
    const MatrixGenerator gb = generator_from_json(generator_to_json(g));
    CHECK(gb.n == 3);
    CHECK(gb.m == 2);
    CHECK(gb.r == 2);
    CHECK_THROWS_AS(generator_from_json(Json::parse(R"({"n":2,"m":2,"r":3})")),
                    InputError);

    const RankCondenser c = fs_condenser(3, 2, Rat(1, 2), {Rat(1), Rat(-2)});
    const RankCondenser cb = condenser_from_json(condenser_to_json(c));
    CHECK(cb.n == c.n);
    CHECK(cb.r == c.r);
    CHECK(cb.omega == c.omega);
    CHECK(cb.points == c.points);
    CHECK(cb.matrices == c.matrices);
}

TEST_CASE("axiom systems and certificates survive a full round trip") {
    const AxiomSystem sys = det_inversion_system(2);
    const Json j = system_to_json(sys);
    const AxiomSystem back = system_from_json(j);

    CHECK(back.det_width == sys.det_width);
    CHECK(back.witness == sys.witness);
    REQUIRE(back.axioms.size() == sys.axioms.size());
    for (std::size_t i = 0; i < sys.axioms.size(); ++i) {
        CHECK(back.axioms[i].name == sys.axioms[i].name);
        CHECK(back.axioms[i].hard == sys.axioms[i].hard);
        CHECK(back.axioms[i].placeholder == sys.axioms[i].placeholder);
        CHECK(back.axioms[i].poly == sys.axioms[i].poly);
    }
    // Serialization is a pure function of the value.
    CHECK(dump_json(system_to_json(back)) == dump_json(j));

    IPSCertificate cert = det_inversion_refutation(2);
    IPSCertificate cb = certificate_from_json(certificate_to_json(cert));
    CHECK(cb.c == cert.c);
    CHECK(cb.verified == cert.verified);

    // The round-tripped pair still verifies.
    CHECK(verify_certificate(cb, back));
}
