#include "doctest.h"

#include "detlab/budget.hpp"
#include "detlab/errors.hpp"
#include "detlab/poly.hpp"
#include "detlab/rng.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;

TEST_CASE("eps scalars behave as a Laurent ring") {
    const EpsScalar one(1);
    const EpsScalar e = EpsScalar::eps(1);

    CHECK((one + e) * (one - e) == one - e * e);
    CHECK(EpsScalar::eps(2, Rat(3)).eps_order() == 2);
    CHECK(EpsScalar::eps(-4).eps_order() == -4);
    CHECK((EpsScalar::eps(-1) + EpsScalar::eps(3)).max_exponent() == 3);
    CHECK((e - e).is_zero());
    CHECK(one.is_rational());
    CHECK(EpsScalar::eps(2, Rat(5)).is_monomial());
    CHECK_FALSE((one + e).is_monomial());

    SUBCASE("shift and monomial inverse") {
        const EpsScalar m = EpsScalar::eps(3, Rat(2, 7));
        CHECK(m.shifted(-3, Rat(7, 2)) == one);
        CHECK(m * m.monomial_inverse() == one);
        CHECK_THROWS_AS((one + e).monomial_inverse(), ContractError);
    }

    SUBCASE("exact division") {
        const EpsScalar num = (one + e) * (one - e);
        CHECK(num.div_exact(one + e) == one - e);
        CHECK(num.div_exact(one - e) == one + e);
        // 1 / (1 + eps) is a power series, not a Laurent polynomial.
        CHECK_THROWS_AS(one.div_exact(one + e), ContractError);
    }

    SUBCASE("substitution and evaluation") {
        CHECK(EpsScalar::eps(2).eps_power_substituted(3) == EpsScalar::eps(6));
        CHECK((one + e).eval(Rat(2)) == Rat(3));
        CHECK(EpsScalar::eps(-1).eval(Rat(1, 2)) == Rat(2));
    }

    SUBCASE("zero has no order") {
        CHECK_THROWS_AS(EpsScalar().eps_order(), ZeroPolynomial);
    }
}

TEST_CASE("variable ids parse and print") {
    CHECK(vx(1, 2).str() == "x[1,2]");
    CHECK(VarId::parse("x[1,2]") == vx(1, 2));
    CHECK(VarId::parse("aux[3]") == VarId(Family::aux, {3}));
    CHECK(VarId::parse(vy({2, 5}).str()) == vy({2, 5}));
    CHECK_THROWS_AS(VarId::parse("q[1]"), ParseError);
    CHECK_THROWS_AS(VarId::parse("x[1,"), ParseError);
    CHECK(vx(1, 2) < vx(2, 1));
}

TEST_CASE("monomials merge factors canonically") {
    const Monomial m = Monomial::from_factors({{vx(2, 1), 1}, {vx(1, 1), 2}, {vx(2, 1), 1}});
    CHECK(m.exponent(vx(1, 1)) == 2);
    CHECK(m.exponent(vx(2, 1)) == 2);
    CHECK(m.total_degree() == 4);
    CHECK(m == Monomial::var(vx(1, 1), 2).times(Monomial::var(vx(2, 1), 2)));

    const std::set<VarId> row1 = {vx(1, 1), vx(1, 2)};
    CHECK(m.degree_in(row1) == 2);
    CHECK(m.restricted_to(row1) == Monomial::var(vx(1, 1), 2));
    CHECK(m.restricted_to(row1).times(m.without(row1)) == m);
}

TEST_CASE("polynomial ring identities") {
    const Poly f = X(1, 1) + X(1, 2).scaled(Rat(2)) - Poly(3);
    const Poly g = X(2, 1) * X(1, 1) + Poly(1);
    const Poly h = X(1, 1) - X(2, 2);

    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(0) == Poly(1));
    CHECK(f.total_degree() == 1);
    CHECK((f * g).total_degree() == 3);
    CHECK(Poly().total_degree() == -1);
}

TEST_CASE("polynomial substitution is a ring homomorphism") {
    const Poly f = X(1, 1) * X(2, 2) - X(1, 2) * X(2, 1);
    const std::map<VarId, Poly> a = {{vx(1, 1), X(1, 1) + X(1, 2)},
                                     {vx(2, 1), X(2, 1) + X(2, 2)}};
    // det is invariant under adding column 2 to column 1.
    CHECK(f.substitute(a) == f);

    const std::map<VarId, Poly> collapse = {{vx(1, 1), Poly(1)},
                                            {vx(2, 2), Poly(1)},
                                            {vx(1, 2), Poly(1)},
                                            {vx(2, 1), Poly(1)}};
    CHECK(f.substitute(collapse).is_zero());

    SUBCASE("eps-power fast path agrees with the general path") {
        const std::map<VarId, std::int64_t> d = {{vx(1, 1), 2}, {vx(1, 2), -1}};
        std::map<VarId, Poly> generic;
        for (const auto& [v, k] : d) generic.emplace(v, Poly(EpsScalar::eps(k)));
        CHECK(f.substitute_eps_powers(d) == f.substitute(generic));
    }
}

TEST_CASE("eps slices and orders of polynomials") {
    Poly f;
    f.add_term(Monomial::var(vx(1, 1)), EpsScalar::eps(2, Rat(3)));
    f.add_term(Monomial::var(vx(2, 2)), EpsScalar::eps(0, Rat(1)) + EpsScalar::eps(2, Rat(-1)));

    CHECK(f.eps_order() == 0);
    CHECK(f.eps_slice(0) == X(2, 2));
    CHECK(f.eps_slice(2) == X(1, 1).scaled(Rat(3)) - X(2, 2));
    CHECK(f.eps_slice(1).is_zero());
    CHECK(f.eps_rescaled(3).eps_slice(6) == f.eps_slice(2));
    CHECK(f.div_eps_monomial(EpsScalar::eps(0, Rat(3))) == f.scaled(Rat(1, 3)));
    CHECK_THROWS_AS(Poly().eps_order(), ZeroPolynomial);
}

TEST_CASE("polynomial evaluation") {
    const Poly f = X(1, 1) * X(2, 2) - X(1, 2) * X(2, 1);
    const std::map<VarId, Rat> pt = {{vx(1, 1), Rat(1)},
                                     {vx(1, 2), Rat(2)},
                                     {vx(2, 1), Rat(3)},
                                     {vx(2, 2), Rat(4)}};
    CHECK(f.eval(pt, Rat(1)) == Rat(-2));

    Poly g = Poly(EpsScalar::eps(1)) * X(1, 1);
    CHECK(g.eval(pt, Rat(5)) == Rat(5));
}

TEST_CASE("seeded rng reproduces and forks") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());

    Rng root(7);
    Rng f1 = root.fork(1);
    Rng f2 = root.fork(1);
    CHECK(f1.next() == f2.next());  // fork is non-mutating and reproducible
    CHECK(root.fork(1).next() != root.fork(2).next());

    Rng r(11);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t v = r.uniform(-3, 5);
        CHECK(v >= -3);
        CHECK(v <= 5);
        CHECK(r.nonzero_rat(-2, 2) != 0);
    }
}

TEST_CASE("term budget caps multiplication") {
    const Poly f = (X(1, 1) + X(1, 2) + X(2, 1) + X(2, 2) + Poly(1)).pow(2);
    {
        term_budget::Scope tight(10);
        CHECK_THROWS_AS((void)(f * f * f), BudgetExceeded);
    }
    // Restored afterwards: the same product succeeds.
    CHECK_FALSE((f * f * f).is_zero());

    term_budget::Scope outer(1000);
    {
        term_budget::Scope inner(10);
        CHECK_THROWS_AS((void)(f * f * f), BudgetExceeded);
    }
    CHECK_FALSE((f * f).is_zero());
}
