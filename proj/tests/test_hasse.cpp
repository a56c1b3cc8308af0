#include "doctest.h"

#include "detlab/hasse.hpp"
#include "detlab/rng.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;
using detlab::testing::minor_poly;

TEST_CASE("hasse derivatives divide out binomial factors") {
    const Poly f = X(1, 1).pow(2) * X(2, 2);  // x^2 y

    CHECK(hasse(f, {{vx(1, 1), 1}}) == X(1, 1) * X(2, 2).scaled(Rat(2)));
    CHECK(hasse(f, {{vx(1, 1), 2}}) == X(2, 2));
    CHECK(hasse(f, {{vx(1, 1), 1}, {vx(2, 2), 1}}) == X(1, 1).scaled(Rat(2)));
    CHECK(hasse(f, {{vx(1, 1), 3}}).is_zero());
    CHECK(hasse(f, {}) == f);

    // Leibniz-free sanity: the order-(2,1) derivative is the top coefficient.
    CHECK(hasse(f, {{vx(1, 1), 2}, {vx(2, 2), 1}}) == Poly(1));
}

TEST_CASE("hasse derivatives pass through eps coefficients") {
    const Poly f = X(1, 1).pow(2).scaled(EpsScalar::eps(3));
    CHECK(hasse(f, {{vx(1, 1), 1}}) == X(1, 1).scaled(EpsScalar::eps(3, Rat(2))));
}

TEST_CASE("derivative space dimensions of determinants") {
    CHECK(deriv_space_dim(Poly::var(vx(1, 1))) == 2);
    CHECK(deriv_space_dim(testing::det_n(2)) == 6);
    CHECK(deriv_space_dim(testing::det_n(3)) == 20);

    CHECK(deriv_space_dim(testing::det_n(2), 1) == 5);
    CHECK(deriv_space_dim(testing::det_n(3), 1) == 10);
    CHECK(deriv_space_dim(testing::det_n(2), 0) == 1);
}

TEST_CASE("ideal elements have large derivative spaces") {
    const Poly f3 = X(1, 1) * minor_poly({1, 2}, {1, 2}, 3, 3) +
                    minor_poly({1, 3}, {2, 3}, 3, 3).scaled(Rat(3));
    CHECK(deriv_space_dim(f3) == 12);

    Rng rng(4242);
    for (int t = 0; t < 5; ++t) {
        const Poly f = testing::random_ideal_element(rng, 3, 3, 2, 2, 2);
        CHECK(deriv_space_dim(f) >= 6);
    }
}

TEST_CASE("dimension under linear substitution") {
    const Poly f = testing::det_n(2);
    const std::size_t nvars = 4;

    SUBCASE("an invertible change of variables preserves all dimensions") {
        // Unipotent upper-triangular mix of the four variables.
        PolyMatrix a(nvars, std::vector<Poly>(nvars));
        for (std::size_t i = 0; i < nvars; ++i)
            for (std::size_t j = 0; j < nvars; ++j)
                a[i][j] = i == j ? Poly(1) : (j == i + 1 ? Poly(2) : Poly());
        const SubstitutionDimReport rep = dim_under_substitution(f, a);
        CHECK(rep.invertible);
        CHECK(rep.dim_original == std::vector<int>{1, 5, 6});
        CHECK(rep.dim_substituted == rep.dim_original);
    }

    SUBCASE("a singular projection can only shrink each dimension") {
        // Identity except x12 -> x11 (variables in increasing id order).
        PolyMatrix a(nvars, std::vector<Poly>(nvars));
        for (std::size_t i = 0; i < nvars; ++i) a[i][i] = Poly(1);
        a[1][1] = Poly();
        a[1][0] = Poly(1);
        const SubstitutionDimReport rep = dim_under_substitution(f, a);
        CHECK_FALSE(rep.invertible);
        REQUIRE(rep.dim_substituted.size() == rep.dim_original.size());
        for (std::size_t d = 0; d < rep.dim_original.size(); ++d)
            CHECK(rep.dim_substituted[d] <= rep.dim_original[d]);
    }
}

TEST_CASE("derivative dimension works over eps coefficients") {
    // eps-scaled copies do not change independence over Q(eps).
    const Poly f = testing::det_n(2).scaled(EpsScalar::eps(2, Rat(3)));
    CHECK(deriv_space_dim(f) == 6);

    // A genuinely mixed-slice polynomial: x11 + eps*x22.
    const Poly g = X(1, 1) + X(2, 2).scaled(EpsScalar::eps(1));
    CHECK(deriv_space_dim(g) == 2);  // {g, 1} but the slices stay tied
}
