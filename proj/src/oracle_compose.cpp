#include "detlab/oracle_compose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "detlab/errors.hpp"
#include "detlab/linalg.hpp"

namespace detlab {

namespace detail {

std::map<VarId, Poly> matrix_assignment(int rows, int cols, const PolyMatrix& forms) {
    std::map<VarId, Poly> a;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) a[vx(i, j)] = forms[i - 1][j - 1];
    return a;
}

int fresh_aux_index(const std::set<VarId>& used, int start) {
    int k = start;
    while (used.count(VarId{Family::aux, {k}}) != 0) ++k;
    return k;
}

DepthThreeOracleCircuit fold_composition(const Poly& f, int rows, int cols,
                                         const PolyMatrix& forms1, const LayeredABP& g,
                                         const Poly& ghat_poly, const VarId& delta,
                                         const VarId& zvar, std::int64_t q,
                                         const Rat& alpha_eff, int t, const Partition& sigma) {
    const Poly g_poly = eval_abp(g);
    const std::int64_t bigl = ghat_poly.total_degree();

    const Poly h1 = f.substitute(matrix_assignment(rows, cols, forms1));
    const Poly expected = (Poly(1) + ghat_poly).pow(t).scaled(EpsScalar::eps(q, alpha_eff));
    {
        const Poly diff = h1 - expected;
        if (!diff.is_zero() && diff.eps_order() <= q)
            throw VerificationFailed("substituted input drifts at the base eps-order");
    }

    // Scale the target's variables by delta and set the homogenizer to
    // delta, so the interesting slice sits at delta-degree exactly deg(ghat).
    std::map<VarId, Poly> scale;
    const Poly dpoly = Poly::var(delta);
    for (const auto& yv : g.variables()) scale[yv] = dpoly * Poly::var(yv);
    scale[zvar] = dpoly;
    const Poly h2 = h1.substitute(scale);

    // Least N such that eps -> eps^N, delta -> eps pushes every term of
    // eps-order above q strictly past the target order qN + deg(ghat).
    std::int64_t bign = 1;
    for (const auto& [mono, coef] : h2.terms()) {
        const std::int64_t d = mono.exponent(delta);
        if (d > bigl) continue;
        for (const auto& [o, cr] : coef.terms()) {
            if (o <= q) continue;
            bign = std::max(bign, (bigl - d) / (o - q) + 1);
        }
    }

    const std::map<VarId, std::int64_t> fold{{delta, 1}};
    DepthThreeOracleCircuit circ;
    circ.n = rows;
    circ.m = cols;
    circ.bottom.resize(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        circ.bottom[i].reserve(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            circ.bottom[i].push_back(
                forms1[i][j].substitute(scale).eps_rescaled(bign).substitute_eps_powers(fold));
    }
    circ.oracle = f;
    circ.c0 = EpsScalar::eps(q * bign, alpha_eff);
    circ.c1 = EpsScalar::eps(q * bign + bigl, alpha_eff * Rat(t));
    circ.q = q;
    circ.t = t;
    circ.fold_n = bign;
    circ.sigma = sigma;

    const Poly h3 = h2.eps_rescaled(bign).substitute_eps_powers(fold);
    const Poly out = (h3 - Poly(circ.c0)).div_eps_monomial(circ.c1);
    if (out.is_zero() || out.eps_order() != 0 || !(out.eps_slice(0) == g_poly))
        throw VerificationFailed("composed circuit does not approximate the target");
    return circ;
}

} // namespace detail

Poly eval_circuit(const DepthThreeOracleCircuit& c) {
    Poly out = c.oracle.substitute(detail::matrix_assignment(c.n, c.m, c.bottom));
    return (out - Poly(c.c0)).div_eps_monomial(c.c1);
}

DepthThreeOracleCircuit compose_projection(const Poly& f, int r, const LayeredABP& g,
                                           int characteristic) {
    if (characteristic != 0)
        throw UnsupportedCharacteristic(
            "composition over characteristic " + std::to_string(characteristic) +
            " is not implemented: the top gate divides by the row count t");
    if (g.vertex_count() > r)
        throw TooManyVertices("target program has " + std::to_string(g.vertex_count()) +
                              " vertices; the width-" + std::to_string(r) +
                              " ideal only hides programs on at most " + std::to_string(r));
    for (const auto& e : g.edges())
        for (const auto& [mono, c] : e.label.terms())
            if (!c.is_rational())
                throw InputError("target program labels must be eps-free");

    const ReductionResult rr = reduce_to_single_bideterminant(f, r);
    const int n = rr.subst.n;
    const int m = rr.subst.m;

    std::set<VarId> used = f.variables();
    for (const auto& v : g.variables()) used.insert(v);
    const int di = detail::fresh_aux_index(used, 1);
    used.insert(VarId{Family::aux, {di}});
    const int zi = detail::fresh_aux_index(used, di + 1);
    const VarId delta{Family::aux, {di}};
    const VarId zvar{Family::aux, {zi}};

    const LayeredABP ghat = homogenize_abp(g, zvar);
    const Poly ghat_poly = eval_abp(ghat);

    // Cycle-cover matrix of the homogenized program, padded to r x r by
    // prepending looped isolated vertices: leading principal minors stay 1
    // and the determinant stays 1 + ghat.
    const PolyMatrix av = valiant_matrix(ghat);
    const int v = static_cast<int>(av.size());
    PolyMatrix ar(static_cast<std::size_t>(r), std::vector<Poly>(static_cast<std::size_t>(r)));
    const int off = r - v;
    for (int i = 0; i < off; ++i) ar[i][i] = Poly(1);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) ar[off + i][off + j] = av[i][j];
    if (r <= 8 && !(ring_det(ar) == Poly(1) + ghat_poly))
        throw VerificationFailed("cycle-cover determinant mismatch");

    // Embed into the full variable matrix with ones down the remaining
    // diagonal, and push through the reduction's change of variables.
    PolyMatrix aext(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (i < r && j < r)
                aext[i][j] = ar[i][j];
            else if (i == j)
                aext[i][j] = Poly(1);
        }
    const auto emb = detail::matrix_assignment(n, m, aext);
    PolyMatrix forms1(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        forms1[i].reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) forms1[i].push_back(rr.subst.forms[i][j].substitute(emb));
    }

    int t = 0;
    for (int s : rr.sigma.parts())
        if (s >= r) ++t;

    return detail::fold_composition(f, n, m, forms1, g, ghat_poly, delta, zvar, rr.q, rr.alpha,
                                     t, rr.sigma);
}

DepthThreeOracleCircuit proj_to_det(const Poly& f, int r, int t, int characteristic) {
    if (t < 1) throw InputError("determinant order must be at least 1");
    const LayeredABP g = det_abp(t);
    if (g.vertex_count() > r)
        throw TooManyVertices("det_" + std::to_string(t) + " needs " +
                              std::to_string(g.vertex_count()) +
                              " program vertices, more than r = " + std::to_string(r));
    return compose_projection(f, r, g, characteristic);
}

DepthThreeOracleCircuit proj_to_imm(const Poly& f, int r, int w, int d, int characteristic) {
    if (w < 1 || d < 1) throw InputError("matrix width and chain length must be positive");
    const LayeredABP g = imm_abp(w, d);
    if (g.vertex_count() > r)
        throw TooManyVertices("imm_{" + std::to_string(w) + "," + std::to_string(d) +
                              "} needs " + std::to_string(g.vertex_count()) +
                              " program vertices, more than r = " + std::to_string(r));
    return compose_projection(f, r, g, characteristic);
}

std::pair<DepthThreeOracleCircuit, std::int64_t> substitute_oracle_with_approx(
    const DepthThreeOracleCircuit& c, const Poly& h) {
    const VarId delta{Family::aux, {1}};
    const std::map<VarId, Poly> off{{delta, Poly()}};
    if (!(h.substitute(off) == c.oracle))
        throw NotAnApproximation("switching off the approximation track does not "
                                 "recover the oracle");

    const Poly raw = h.substitute(detail::matrix_assignment(c.n, c.m, c.bottom));
    const Poly out = (raw - Poly(c.c0)).div_eps_monomial(c.c1);

    // Least N with every delta-carrying term pushed to eps-order >= 1 under
    // delta -> eps^N, so the eps^0 output slice survives.
    std::int64_t bign = 1;
    for (const auto& [mono, coef] : out.terms()) {
        const std::int64_t d = mono.exponent(delta);
        if (d == 0) continue;
        for (const auto& [o, cr] : coef.terms())
            if (o < 1) bign = std::max(bign, (1 - o + d - 1) / d);
    }

    DepthThreeOracleCircuit folded = c;
    folded.oracle = h.substitute_eps_powers({{delta, bign}});

    const Poly base = out.substitute(off);
    const Poly now = out.substitute_eps_powers({{delta, bign}});
    if (!(now.eps_slice(0) == base.eps_slice(0)) || (!now.is_zero() && now.eps_order() < 0))
        throw VerificationFailed("approximation folding disturbed the output slice");
    return {folded, bign};
}

} // namespace detlab
