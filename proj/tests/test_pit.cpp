#include "doctest.h"

#include <vector>

#include "detlab/errors.hpp"
#include "detlab/pit.hpp"
#include "detlab/straighten.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;
using detlab::testing::minor_poly;

TEST_CASE("matrix generator validation and expansion") {
    CHECK_THROWS_AS(MatrixGenerator(0, 2, 1), InputError);
    CHECK_THROWS_AS(MatrixGenerator(2, 0, 1), InputError);
    CHECK_THROWS_AS(MatrixGenerator(2, 2, -1), InputError);
    CHECK_THROWS_AS(MatrixGenerator(2, 2, 3), InputError);

    SUBCASE("each coordinate is the bilinear rank-r form") {
        const PolyMatrix coords = expand_generator(MatrixGenerator(2, 3, 2));
        REQUIRE(coords.size() == 2);
        REQUIRE(coords[0].size() == 3);
        for (const auto& row : coords)
            for (const Poly& c : row) {
                CHECK(c.term_count() == 2);
                CHECK(c.total_degree() == 2);
            }
        Poly expected;
        for (int l = 1; l <= 2; ++l)
            expected += Poly::var(vy({1, l})) * Poly::var(vz({l, 2}));
        CHECK(coords[0][1] == expected);
    }

    SUBCASE("inner dimension zero gives the zero map") {
        const PolyMatrix coords = expand_generator(MatrixGenerator(2, 2, 0));
        for (const auto& row : coords)
            for (const Poly& c : row) CHECK(c.is_zero());
    }
}

TEST_CASE("applying the generator substitutes matrix coordinates") {
    const MatrixGenerator g(2, 2, 1);

    SUBCASE("a determinant collapses under a rank-one substitution") {
        CHECK(apply_generator(testing::det_n(2), g).is_zero());
    }

    SUBCASE("a non-ideal element survives") {
        const Poly f = X(1, 1) * X(2, 2);
        const Poly composed = apply_generator(f, g);
        CHECK_FALSE(composed.is_zero());
        CHECK(composed.total_degree() == 4);
    }

    SUBCASE("only grid variables are accepted") {
        CHECK_THROWS_AS(apply_generator(Poly::var(vy({1, 1})), g), VariableMismatch);
        CHECK_THROWS_AS(apply_generator(X(3, 1), g), EntryOutOfBounds);
        CHECK_THROWS_AS(apply_generator(X(1, 3), g), EntryOutOfBounds);
    }
}

TEST_CASE("vanishing equivalence joins composition and straightening") {
    CHECK_THROWS_AS(vanishing_equivalence(testing::det_n(2), 0), InputError);

    SUBCASE("determinant at its own width") {
        const VanishingReport rep = vanishing_equivalence(testing::det_n(2), 2);
        CHECK(rep.n == 2);
        CHECK(rep.m == 2);
        CHECK(rep.r == 2);
        CHECK(rep.composition_zero);
        CHECK(rep.in_ideal);
    }

    SUBCASE("width above the grid leaves an empty ideal") {
        const VanishingReport rep = vanishing_equivalence(testing::det_n(2), 3);
        CHECK_FALSE(rep.composition_zero);
        CHECK_FALSE(rep.in_ideal);
    }

    SUBCASE("width one catches every constant-free polynomial") {
        const VanishingReport rep = vanishing_equivalence(X(1, 1) * X(2, 2) + X(1, 2), 1);
        CHECK(rep.composition_zero);
        CHECK(rep.in_ideal);
    }

    SUBCASE("monomials escape larger widths") {
        const VanishingReport rep = vanishing_equivalence(X(1, 1) * X(2, 2), 2);
        CHECK_FALSE(rep.composition_zero);
        CHECK_FALSE(rep.in_ideal);
    }

    SUBCASE("a minor with cofactor stays in the ideal") {
        const Poly f = minor_poly({1, 2}, {2, 3}, 3, 3) * X(3, 1);
        const VanishingReport rep = vanishing_equivalence(f, 2);
        CHECK(rep.n == 3);
        CHECK(rep.m == 3);
        CHECK(rep.composition_zero);
        CHECK(rep.in_ideal);
    }

    SUBCASE("degenerate inputs") {
        const VanishingReport zero = vanishing_equivalence(Poly(), 2);
        CHECK(zero.composition_zero);
        CHECK(zero.in_ideal);

        const VanishingReport constant = vanishing_equivalence(Poly(5), 2);
        CHECK_FALSE(constant.composition_zero);
        CHECK_FALSE(constant.in_ideal);
    }
}

TEST_CASE("recursive generator composes square product maps") {
    SUBCASE("one stage reproduces the plain generator") {
        const RecursiveGenerator rg = recursive_generator(2, 1, {1});
        CHECK(rg.n == 2);
        CHECK(rg.k == 1);
        REQUIRE(rg.stages.size() == 1);
        CHECK(rg.stages[0].n == 2);
        CHECK(rg.stages[0].r == 1);
        CHECK(rg.seed_length == 4);
        CHECK(rg.degree == 2);
        REQUIRE(rg.coordinates.size() == 2);
        CHECK(rg.coordinates[0] == Poly::var(vy({1, 1, 1})) * Poly::var(vz({1, 1, 1})));
        CHECK(rg.coordinates[1] == Poly::var(vy({1, 1, 1})) * Poly::var(vz({1, 1, 2})));
    }

    SUBCASE("two stages square the degree and use only innermost seeds") {
        const RecursiveGenerator rg = recursive_generator(2, 2, {1, 1});
        CHECK(rg.degree == 4);
        CHECK(rg.seed_length == 4);
        for (const Poly& c : rg.coordinates) {
            CHECK(c.total_degree() == 4);
            for (const VarId& v : c.variables()) {
                CHECK((v.fam == Family::y || v.fam == Family::z));
                REQUIRE(v.idx.size() == 3);
                CHECK(v.idx[0] == 2);  // stage-2 variables only
            }
        }
    }

    SUBCASE("three stages reach degree eight") {
        const RecursiveGenerator rg = recursive_generator(2, 3, {1, 1, 1});
        CHECK(rg.degree == 8);
        CHECK(rg.stages.size() == 3);
    }

    SUBCASE("schedule validation") {
        CHECK_THROWS_AS(recursive_generator(2, 2, {1}), InconsistentSchedule);
        CHECK_THROWS_AS(recursive_generator(2, 1, {0}), InconsistentSchedule);
        CHECK_THROWS_AS(recursive_generator(2, 1, {3}), InconsistentSchedule);
        CHECK_THROWS_AS(recursive_generator(0, 1, {1}), InputError);
        CHECK_THROWS_AS(recursive_generator(2, 0, {}), InputError);
    }
}

TEST_CASE("folded condenser matrices follow the geometric grid") {
    const RankCondenser c = fs_condenser(3, 2, Rat(2), {Rat(1), Rat(2)});
    CHECK(c.n == 3);
    CHECK(c.r == 2);
    CHECK(c.omega == Rat(2));
    REQUIRE(c.matrices.size() == 2);

    const QMatrix w1 = {{Rat(2), Rat(4), Rat(8)}, {Rat(4), Rat(16), Rat(64)}};
    const QMatrix w2 = {{Rat(4), Rat(16), Rat(64)}, {Rat(8), Rat(64), Rat(512)}};
    CHECK(c.matrices[0] == w1);
    CHECK(c.matrices[1] == w2);

    SUBCASE("fractional omega and points are fine") {
        const RankCondenser half = fs_condenser(2, 1, Rat(1, 2), {Rat(1, 3)});
        CHECK(half.matrices[0][0][0] == Rat(1, 6));
        CHECK(half.matrices[0][0][1] == Rat(1, 36));
    }

    SUBCASE("finite-order omegas are rejected") {
        CHECK_THROWS_AS(fs_condenser(3, 2, Rat(0), {Rat(1)}), BadOmega);
        CHECK_THROWS_AS(fs_condenser(3, 2, Rat(1), {Rat(1)}), BadOmega);
        CHECK_THROWS_AS(fs_condenser(3, 2, Rat(-1), {Rat(1)}), BadOmega);
    }

    SUBCASE("points must be nonzero and distinct") {
        CHECK_THROWS_AS(fs_condenser(3, 2, Rat(2), {Rat(0)}), InputError);
        CHECK_THROWS_AS(fs_condenser(3, 2, Rat(2), {Rat(1), Rat(1)}), InputError);
    }

    SUBCASE("rank bounds") {
        CHECK_THROWS_AS(fs_condenser(3, 0, Rat(2), {Rat(1)}), InputError);
        CHECK_THROWS_AS(fs_condenser(3, 4, Rat(2), {Rat(1)}), InputError);
    }
}

TEST_CASE("condensed rank equations cut out the low-rank locus") {
    SUBCASE("scalar case: r = 1 equations are quadratic forms") {
        const RankCondenser c = fs_condenser(2, 1, Rat(2), {Rat(1), Rat(2), Rat(3)});
        const std::vector<Poly> eqs = rank_lt_equations(2, 1, c);
        REQUIRE(eqs.size() == 3);
        // E = [2 4] gives sum_{a,b} e_a e_b x[a,b].
        Poly expected = X(1, 1).scaled(Rat(4)) + X(1, 2).scaled(Rat(8)) +
                        X(2, 1).scaled(Rat(8)) + X(2, 2).scaled(Rat(16));
        CHECK(eqs[0] == expected);
        // Every equation vanishes at X = 0 and some equation sees X = I.
        bool hit = false;
        for (const Poly& e : eqs) {
            CHECK(e.coefficient(Monomial()).is_zero());
            if (e.eval({{vx(1, 1), Rat(1)}, {vx(2, 2), Rat(1)},
                        {vx(1, 2), Rat(0)}, {vx(2, 1), Rat(0)}},
                       Rat(1)) != 0)
                hit = true;
        }
        CHECK(hit);
    }

    SUBCASE("r = 2 equations vanish identically on rank-one matrices") {
        const RankCondenser c =
            fs_condenser(3, 2, Rat(2), {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
        const std::vector<Poly> eqs = rank_lt_equations(3, 2, c);
        REQUIRE(eqs.size() == 5);
        const MatrixGenerator rank1(3, 3, 1);
        const MatrixGenerator rank2(3, 3, 2);
        bool survives_rank2 = false;
        for (const Poly& e : eqs) {
            CHECK(is_in_det_ideal(e, 2));
            CHECK(apply_generator(e, rank1).is_zero());
            if (!apply_generator(e, rank2).is_zero()) survives_rank2 = true;
        }
        CHECK(survives_rank2);
    }

    SUBCASE("too few matrices are rejected") {
        const RankCondenser c = fs_condenser(3, 2, Rat(2), {Rat(1), Rat(2), Rat(3), Rat(4)});
        CHECK_THROWS_AS(rank_lt_equations(3, 2, c), CondenserTooSmall);
    }

    SUBCASE("parameters must match the condenser") {
        const RankCondenser c = fs_condenser(2, 1, Rat(2), {Rat(1), Rat(2), Rat(3)});
        CHECK_THROWS_AS(rank_lt_equations(2, 2, c), InputError);
    }
}

TEST_CASE("rank factorization splits a matrix through its rank") {
    SUBCASE("rank-one matrix splits through width one") {
        const QMatrix a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(3), Rat(6)}};
        const auto [y, z] = rank_factorization(a, 1);
        REQUIRE(y.size() == 3);
        REQUIRE(y[0].size() == 1);
        REQUIRE(z.size() == 1);
        REQUIRE(z[0].size() == 2);
        CHECK(testing::qmul(y, z) == a);
    }

    SUBCASE("extra width is padded with zeros") {
        const QMatrix a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
        const auto [y, z] = rank_factorization(a, 2);
        CHECK(y[0].size() == 2);
        CHECK(z.size() == 2);
        CHECK(testing::qmul(y, z) == a);
        CHECK(y[0][1] == Rat(0));
        CHECK(y[1][1] == Rat(0));
    }

    SUBCASE("full-rank matrix with fractions") {
        const QMatrix a = {{Rat(1, 2), Rat(1)}, {Rat(1), Rat(3)}};
        const auto [y, z] = rank_factorization(a, 2);
        CHECK(testing::qmul(y, z) == a);
    }

    SUBCASE("width below the rank is a contract violation") {
        const QMatrix eye = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
        CHECK_THROWS_AS(rank_factorization(eye, 1), ContractError);
        CHECK_THROWS_AS(rank_factorization(eye, -1), InputError);
    }
}

TEST_CASE("randomized nonzeroness probe") {
    const Poly det2 = testing::det_n(2);

    SUBCASE("nonzero polynomials are caught and rerun identically") {
        const bool first = sz_test(det2, 20, 42, -10, 10);
        const bool second = sz_test(det2, 20, 42, -10, 10);
        CHECK(first);
        CHECK(first == second);
    }

    SUBCASE("a positive polynomial is caught on the first trial") {
        CHECK(sz_test(X(1, 1).pow(2) + Poly(1), 1, 7, -5, 5));
    }

    SUBCASE("the zero polynomial never fires") {
        CHECK_FALSE(sz_test(Poly(), 10, 3, -5, 5));
    }

    SUBCASE("eps is always sampled nonzero") {
        const Poly just_eps = Poly(EpsScalar::eps(1));
        CHECK(sz_test(just_eps, 1, 11, -3, 3));
        CHECK(sz_test(Poly::var(vx(1, 1)).scaled(EpsScalar::eps(2)), 25, 11, -10, 10));
    }

    SUBCASE("range validation") {
        CHECK_THROWS_AS(sz_test(det2, 5, 1, 0, 1), InputError);   // size <= degree
        CHECK_THROWS_AS(sz_test(det2, 5, 1, 3, 2), InputError);   // empty range
        CHECK_THROWS_AS(sz_test(Poly(1), 5, 1, 0, 0), InputError);  // only zero
        CHECK_THROWS_AS(sz_test(det2, -1, 1, -10, 10), InputError);
    }
}
