#include "doctest.h"

#include "detlab/pfaffian.hpp"
#include "detlab/rng.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;

namespace {

Poly subpf(const std::vector<int>& idx, const SkewContext& ctx) {
    return expand_standard_monomial(Tableau({idx}), ctx);
}

PolyMatrix random_skew(Rng& rng, int size) {
    PolyMatrix a(static_cast<std::size_t>(size),
                 std::vector<Poly>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            const Poly v(rng.rat(-9, 9));
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
        }
    return a;
}

} // namespace

TEST_CASE("pfaffians of generic skew matrices") {
    CHECK(pfaffian(SkewContext(2).matrix()) == X(1, 2));

    const Poly pf4 = pfaffian(SkewContext(4).matrix());
    CHECK(pf4 == X(1, 2) * X(3, 4) - X(1, 3) * X(2, 4) + X(1, 4) * X(2, 3));

    const Poly pf6 = pfaffian(SkewContext(6).matrix());
    CHECK(pf6.term_count() == 15);
    const auto coeff = [&](std::vector<std::pair<int, int>> ps) {
        std::vector<std::pair<VarId, int>> fs;
        for (auto [i, j] : ps) fs.emplace_back(vx(i, j), 1);
        return pf6.coefficient(Monomial::from_factors(std::move(fs)));
    };
    CHECK(coeff({{1, 2}, {3, 4}, {5, 6}}) == EpsScalar(1));
    CHECK(coeff({{1, 3}, {2, 4}, {5, 6}}) == EpsScalar(-1));
    CHECK(coeff({{1, 6}, {2, 5}, {3, 4}}) == EpsScalar(1));
    CHECK(coeff({{1, 4}, {2, 5}, {3, 6}}) == EpsScalar(-1));

    CHECK(pfaffian(PolyMatrix{}) == Poly(1));
}

TEST_CASE("pfaffian input validation") {
    CHECK_THROWS_AS(pfaffian(SkewContext(3).matrix()), OddOrder);
    PolyMatrix bad = SkewContext(2).matrix();
    bad[1][0] = bad[0][1];  // breaks skew symmetry
    CHECK_THROWS_AS(pfaffian(bad), NotSkew);
}

TEST_CASE("pfaffian squared is the determinant") {
    const PolyMatrix m = SkewContext(4).matrix();
    const Poly pf = pfaffian(m);
    CHECK(pf * pf == ring_det(m));
}

TEST_CASE("congruence transforms scale by the determinant") {
    Rng rng(99);
    for (int t = 0; t < 5; ++t) {
        const int size = t % 2 == 0 ? 4 : 6;
        const PolyMatrix a = random_skew(rng, size);
        PolyMatrix b(static_cast<std::size_t>(size),
                     std::vector<Poly>(static_cast<std::size_t>(size)));
        for (auto& row : b)
            for (auto& v : row) v = Poly(rng.rat(-4, 4));
        PolyMatrix bt(b);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                bt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(pfaffian(mat_mul(mat_mul(b, a), bt)) == ring_det(b) * pfaffian(a));
    }
}

TEST_CASE("skew context inference and standard monomial expansion") {
    const SkewContext ctx(6);
    CHECK(skew_context_of(X(1, 2) * X(3, 6)).matrix().size() == 6);
    CHECK_THROWS_AS(skew_context_of(Poly::var(vx(2, 1))), InputError);

    // One row: a principal sub-Pfaffian.
    PolyMatrix sub(4, std::vector<Poly>(4));
    const int idx[4] = {1, 2, 4, 6};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const int a = std::min(idx[i], idx[j]);
            const int b = std::max(idx[i], idx[j]);
            const Poly v = Poly::var(vx(a, b));
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                idx[i] < idx[j] ? v : -v;
        }
    CHECK(subpf({1, 2, 4, 6}, ctx) == pfaffian(sub));

    // Several rows multiply.
    CHECK(expand_standard_monomial(Tableau({{1, 2, 3, 4}, {1, 2}}), ctx) ==
          subpf({1, 2, 3, 4}, ctx) * X(1, 2));
}

TEST_CASE("pfaffian straightening round trip and width") {
    const SkewContext ctx(6);
    Rng rng(3131);
    for (int t = 0; t < 8; ++t) {
        Poly f;
        for (int p = 0; p < 2; ++p) {
            const auto quads = testing::combinations(6, 4);
            const auto& q = quads[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(quads.size()) - 1))];
            f += subpf(q, ctx).scaled(rng.nonzero_rat(-4, 4));
        }
        if (f.is_zero()) continue;
        const StdMonExpr e = pfaff_straighten(f);
        CHECK(e.expand(ctx) == f);
        CHECK(e.min_width() >= 4);
    }

    CHECK(pfaff_straighten(X(1, 2)).min_width() == 2);
}

TEST_CASE("pfaffian ideal membership agrees with brute force") {
    const SkewContext ctx(6);
    CHECK(is_in_pfaff_ideal(subpf({1, 2, 3, 4}, ctx), 4));
    CHECK(is_in_pfaff_ideal(subpf({2, 3, 4, 5}, ctx) * X(1, 2), 4));
    CHECK_FALSE(is_in_pfaff_ideal(X(1, 2), 4));
    CHECK_FALSE(is_in_pfaff_ideal(X(1, 2) * X(3, 4), 4));  // product of widths 2
    CHECK(is_in_pfaff_ideal(Poly(), 4));

    CHECK(pfaff_brute_force_membership(subpf({1, 2, 3, 4}, ctx), 4, 2));
    CHECK_FALSE(pfaff_brute_force_membership(X(1, 2), 4, 3));
}

TEST_CASE("pfaffian reduction to a single standard monomial") {
    const SkewContext ctx(6);
    const Poly f = subpf({1, 2, 4, 6}, ctx) * X(1, 2).scaled(Rat(2)) -
                   subpf({2, 3, 4, 5}, ctx);
    const ReductionResult rr = pfaff_reduce(f, 2);
    CHECK(rr.sigma.width() >= 4);

    const Poly g = f.substitute(rr.subst.as_assignment());
    REQUIRE_FALSE(g.is_zero());
    CHECK(g.eps_order() == rr.q);
    const Poly expected =
        expand_standard_monomial(k_tableau(rr.sigma), ctx).scaled(rr.alpha);
    CHECK(g.eps_slice(rr.q) == expected);
    CHECK(rr.slice == expected);

    CHECK_THROWS_AS(pfaff_reduce(X(1, 2), 2), NotInIdeal);
}

TEST_CASE("principal embedding turns sub-pfaffians into determinants") {
    const int n = 2;
    PolyMatrix a(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Poly::var(VarId(Family::u, {i + 1, j + 1}));
    const PolyMatrix m = subpfaff_embed(a);
    REQUIRE(m.size() == 4);

    // k = 1: Pf of the leading 2x2 equals det of the leading 1x1.
    PolyMatrix lead2 = {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
    CHECK(pfaffian(lead2) == a[0][0]);
    // k = 2: sign (-1)^{k(k-1)/2} = -1.
    CHECK(pfaffian(m) == -ring_det(a));
}

TEST_CASE("pfaffian-backed composition") {
    const SkewContext ctx(6);
    const Poly f = pfaffian(ctx.matrix());  // Pf_6 lies in the width-6 ideal
    const DepthThreeOracleCircuit c = pfaff_compose(f, 3, testing::path_abp());
    CHECK(eval_circuit(c).eps_slice(0) == eval_abp(testing::path_abp()));
}
