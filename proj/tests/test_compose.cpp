#include "doctest.h"

#include "detlab/oracle_compose.hpp"
#include "detlab/rng.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;
using detlab::testing::minor_poly;
using detlab::testing::path_abp;

TEST_CASE("composition produces the target value in the eps^0 slice") {
    const Poly f = testing::det_n(3);
    const LayeredABP g = path_abp();
    const DepthThreeOracleCircuit c = compose_projection(f, 3, g);

    CHECK(c.n == 3);
    CHECK(c.m == 3);
    REQUIRE(c.bottom.size() == 3);
    CHECK(c.oracle == f);
    CHECK(c.t >= 1);
    CHECK(c.fold_n >= 1);
    CHECK(c.sigma.width() >= 3);

    const Poly value = eval_circuit(c);
    CHECK(value.eps_slice(0) == eval_abp(g));
    // Everything below the output slice vanishes.
    CHECK(value.eps_order() == 0);
}

TEST_CASE("composition works from any ideal element, not just the determinant") {
    Rng rng(606);
    for (int t = 0; t < 3; ++t) {
        const Poly f = testing::random_ideal_element(rng, 3, 3, 3, 1, 2);
        const DepthThreeOracleCircuit c = compose_projection(f, 3, path_abp());
        CHECK(eval_circuit(c).eps_slice(0) == eval_abp(path_abp()));
    }
}

TEST_CASE("determinant and matrix-product targets") {
    SUBCASE("clow-sequence determinant target") {
        const DepthThreeOracleCircuit c = proj_to_det(testing::det_n(2), 2, 1);
        CHECK(eval_circuit(c).eps_slice(0) == eval_abp(det_abp(1)));
    }
    SUBCASE("iterated product target") {
        const DepthThreeOracleCircuit c = proj_to_imm(testing::det_n(3), 3, 1, 2);
        CHECK(eval_circuit(c).eps_slice(0) == eval_abp(imm_abp(1, 2)));
    }
}

TEST_CASE("programs larger than the width bound are rejected") {
    // diamond has 4 vertices > r = 2.
    CHECK_THROWS_AS(compose_projection(testing::det_n(2), 2, testing::diamond_abp()),
                    TooManyVertices);
    // det_2's clow program needs 5 vertices, more than r = 3.
    CHECK_THROWS_AS(proj_to_det(testing::det_n(3), 3, 2), TooManyVertices);
}

TEST_CASE("non-members and unsupported characteristics are rejected") {
    // Two vertices keep the program inside the width bound, so membership
    // of the polynomial itself is what gets rejected.
    const LayeredABP edge({{"s"}, {"t"}}, {{"s", "t", Poly::var(vy({1}))}});
    CHECK_THROWS_AS(compose_projection(X(1, 1) * X(2, 2), 2, edge), NotInIdeal);
    CHECK_THROWS_AS(compose_projection(testing::det_n(3), 3, path_abp(), 5),
                    UnsupportedCharacteristic);
}

TEST_CASE("oracle replacement folds approximation error away") {
    const DepthThreeOracleCircuit c = compose_projection(testing::det_n(3), 3, path_abp());
    const Poly err = Poly::var(VarId(Family::aux, {1})) * X(1, 1).pow(3);
    const auto [c2, n] = substitute_oracle_with_approx(c, c.oracle + err);
    CHECK(n >= 1);
    CHECK(eval_circuit(c2).eps_slice(0) == eval_abp(path_abp()));

    SUBCASE("an exact oracle is accepted and leaves the value intact") {
        const auto [c3, n3] = substitute_oracle_with_approx(c, c.oracle);
        CHECK(eval_circuit(c3).eps_slice(0) == eval_abp(path_abp()));
    }
    SUBCASE("an order-zero perturbation is not an approximation") {
        CHECK_THROWS_AS(substitute_oracle_with_approx(c, c.oracle + X(1, 1)),
                        NotAnApproximation);
    }
}
