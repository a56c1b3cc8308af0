#include "detlab/degeneration.hpp"

#include <algorithm>
#include <limits>

#include "detlab/linalg.hpp"

namespace detlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > (static_cast<__int128>(1) << 62) || p < -(static_cast<__int128>(1) << 62))
        throw ExponentOverflow("weight exponent overflow");
    return static_cast<std::int64_t>(p);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > (static_cast<__int128>(1) << 62) || s < -(static_cast<__int128>(1) << 62))
        throw ExponentOverflow("weight exponent overflow");
    return static_cast<std::int64_t>(s);
}

std::int64_t weight_of(const Monomial& mono, const std::map<VarId, std::int64_t>& w) {
    std::int64_t acc = 0;
    for (const auto& [v, e] : mono.factors()) {
        auto it = w.find(v);
        if (it != w.end()) acc = checked_add(acc, checked_mul(it->second, e));
    }
    return acc;
}

void require_rational_coefficients(const Poly& f, const char* what) {
    for (const auto& [mono, c] : f.terms())
        if (!c.is_rational())
            throw InputError(std::string(what) + " expects epsilon-free coefficients");
}

std::vector<std::pair<int, int>> ordered_pairs(int k) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j) out.emplace_back(i, j);
    return out;
}

PolyMatrix elementary(int k, int i, int j, const VarId& v) {
    PolyMatrix e = mat_identity(k);
    e[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Poly::var(v);
    return e;
}

PolyMatrix antidiagonal(int k) {
    PolyMatrix j(static_cast<std::size_t>(k), std::vector<Poly>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1 - i)] = Poly(1L);
    return j;
}

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

PolyMatrix mat_identity(int k) {
    PolyMatrix m(static_cast<std::size_t>(k), std::vector<Poly>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Poly(1L);
    return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
    PolyMatrix c(n, std::vector<Poly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

std::map<VarId, Poly> LinearSubst::as_assignment() const {
    std::map<VarId, Poly> a;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            a[vx(i, j)] = forms[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return a;
}

Poly eps_scale_variables(const Poly& f, const std::map<VarId, std::int64_t>& d) {
    Poly out;
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, c.shifted(weight_of(mono, d)));
    return out;
}

std::pair<Poly, std::int64_t> single_degenerate(const Poly& f,
                                                const std::map<VarId, std::int64_t>& u) {
    if (f.is_zero()) throw ZeroPolynomial("single_degenerate of the zero polynomial");
    std::int64_t lambda = 0;
    bool first = true;
    for (const auto& [mono, c] : f.terms()) {
        const std::int64_t w = weight_of(mono, u);
        if (first || w > lambda) lambda = w;
        first = false;
    }
    Poly out;
    for (const auto& [mono, c] : f.terms())
        out.add_term(mono, c.shifted(lambda - weight_of(mono, u)));
    return {out, lambda};
}

std::pair<std::map<VarId, std::int64_t>, std::int64_t> multi_degenerate(
    const Poly& f, const std::vector<std::map<VarId, std::int64_t>>& stages) {
    if (f.is_zero()) throw ZeroPolynomial("multi_degenerate of the zero polynomial");
    std::map<VarId, std::int64_t> d;
    for (const auto& u : stages)
        for (const auto& [v, w] : u) d.emplace(v, 0);
    std::int64_t m = 0;
    std::vector<Monomial> face;
    for (const auto& [mono, c] : f.terms()) face.push_back(mono);

    for (const auto& u : stages) {
        std::int64_t lambda = 0;
        bool first = true;
        for (const auto& mono : face) {
            const std::int64_t w = weight_of(mono, u);
            if (first || w > lambda) lambda = w;
            first = false;
        }
        // Fold the previous eps track under eps -> eps^{M+1}, delta -> eps,
        // with M the largest delta-denominator among strictly-positive-order
        // terms; computed exactly from the current orders m + <a, d>.
        std::int64_t big_m = 0;
        for (const auto& [mono, c] : f.terms()) {
            const std::int64_t order = checked_add(m, weight_of(mono, d));
            if (order >= 1) big_m = std::max(big_m, weight_of(mono, u) - lambda);
        }
        m = checked_add(lambda, checked_mul(big_m + 1, m));
        for (auto& [v, dv] : d) {
            auto it = u.find(v);
            const std::int64_t uv = it == u.end() ? 0 : it->second;
            dv = checked_add(checked_mul(big_m + 1, dv), -uv);
        }
        std::vector<Monomial> next;
        for (const auto& mono : face)
            if (weight_of(mono, u) == lambda) next.push_back(mono);
        face = std::move(next);
    }
    return {d, m};
}

std::pair<std::map<VarId, std::int64_t>, std::int64_t> lex_degenerate_to_lc(
    const Poly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw ZeroPolynomial("lex degeneration of the zero polynomial");
    const std::vector<VarId>& vars = order.variables();
    // Positional weights: w_i = prod_{j > i} (D_j + 1) realizes the
    // lexicographic comparison for exponents bounded by the per-variable
    // degrees D_j of f.
    std::map<VarId, std::int64_t> w;
    std::int64_t acc = 1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        w[*it] = acc;
        acc = checked_mul(acc, static_cast<std::int64_t>(f.degree_in(*it)) + 1);
    }
    std::int64_t lambda = 0;
    bool first = true;
    for (const auto& [mono, c] : f.terms()) {
        const std::int64_t wt = weight_of(mono, w);
        if (first || wt > lambda) lambda = wt;
        first = false;
    }
    std::map<VarId, std::int64_t> assignment;
    for (const auto& [v, wv] : w) assignment[v] = -wv;
    return {assignment, -lambda};
}

PolyMatrix row_transform(int n) {
    if (n < 1) throw InputError("row_transform needs n >= 1");
    PolyMatrix m = mat_identity(n);
    for (const auto& [i, j] : ordered_pairs(n)) m = mat_mul(m, elementary(n, i, j, vlambda(i, j)));
    return mat_mul(m, antidiagonal(n));
}

PolyMatrix col_transform(int m) {
    if (m < 1) throw InputError("col_transform needs m >= 1");
    // Transpose of the row construction: xi[i,j] sits at (j,i) so that
    // right-multiplication adds column j into column i, replacing i by j
    // in the column tableaux of each bideterminant's leading term.
    PolyMatrix out = antidiagonal(m);
    auto pairs = ordered_pairs(m);
    std::reverse(pairs.begin(), pairs.end());
    for (const auto& [i, j] : pairs) out = mat_mul(out, elementary(m, j, i, vxi(i, j)));
    return out;
}

namespace {

const VarId kYScale{Family::y, {}};
const VarId kZScale{Family::z, {}};

// Direct application of x[k,l] -> y^{(D+1)^k} z^{(D+1)^l} x[k,l].
Poly apply_yz_scaling(const Poly& g, int big_d) {
    Poly out;
    for (const auto& [mono, c] : g.terms()) {
        std::int64_t ye = 0, ze = 0;
        for (const auto& [v, e] : mono.factors()) {
            if (v.fam != Family::x) continue;
            ye = checked_add(ye, checked_mul(e, int_pow(big_d + 1, v.idx[0])));
            ze = checked_add(ze, checked_mul(e, int_pow(big_d + 1, v.idx[1])));
        }
        if (ye > std::numeric_limits<int>::max() || ze > std::numeric_limits<int>::max())
            throw ExponentOverflow("y/z scaling exponent too large");
        auto factors = mono.factors();
        if (ye > 0) factors.emplace_back(kYScale, static_cast<int>(ye));
        if (ze > 0) factors.emplace_back(kZScale, static_cast<int>(ze));
        out.add_term(Monomial::from_factors(std::move(factors)), c);
    }
    return out;
}

std::vector<std::vector<EpsScalar>> scalar_matrix(const PolyMatrix& p,
                                                  const std::map<VarId, std::int64_t>& phi) {
    std::vector<std::vector<EpsScalar>> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const auto& entry : p[i]) {
            const Poly img = entry.substitute_eps_powers(phi);
            if (img.is_zero())
                out[i].push_back(EpsScalar());
            else if (img.term_count() == 1 && img.terms().begin()->first.is_one())
                out[i].push_back(img.terms().begin()->second);
            else
                throw VerificationFailed("transform entry did not collapse to a scalar");
        }
    return out;
}

EpsScalar eps_det(const std::vector<std::vector<EpsScalar>>& m) { return ring_det(m); }

} // namespace

ReductionResult reduce_to_single_bideterminant(const Poly& f, int r) {
    if (f.is_zero()) throw ZeroPolynomial("cannot reduce the zero polynomial");
    require_rational_coefficients(f, "reduce_to_single_bideterminant");
    const BidetExpr expr = straighten(f);
    if (expr.min_width() < r)
        throw NotInIdeal("polynomial is not in the width-" + std::to_string(r) +
                         " determinantal ideal");
    auto [n, m] = infer_matrix_shape(f);

    ReductionResult res;

    // Already a single initial bideterminant: the identity substitution
    // satisfies the contract with q = 0, and avoids a needless blowup.
    if (expr.terms().size() == 1) {
        const auto& [b, c] = *expr.terms().begin();
        const Partition sigma = b.S.shape();
        if (b.S == k_tableau(sigma) && b.T == k_tableau(sigma)) {
            res.subst.n = n;
            res.subst.m = m;
            res.subst.forms = PolyMatrix(static_cast<std::size_t>(n),
                                         std::vector<Poly>(static_cast<std::size_t>(m)));
            const std::size_t nm = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
            res.subst.coeff_matrix.assign(nm, std::vector<EpsScalar>(nm));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j) {
                    res.subst.forms[i - 1][j - 1] = Poly::var(vx(i, j));
                    const std::size_t k = static_cast<std::size_t>((i - 1) * m + (j - 1));
                    res.subst.coeff_matrix[k][k] = EpsScalar(Rat(1));
                }
            res.subst.det = EpsScalar(Rat(1));
            res.q = 0;
            res.alpha = c.coeff(0);
            res.sigma = sigma;
            res.slice = f;
            return res;
        }
    }

    const PolyMatrix mt = row_transform(n);
    const PolyMatrix nt = col_transform(m);

    // x[i,j] -> (M X N)[i,j], as explicit linear forms over Q[lambda, xi].
    PolyMatrix symbolic_forms(static_cast<std::size_t>(n),
                              std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            Poly form;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= m; ++l)
                    form += mt[i - 1][k - 1] * nt[l - 1][j - 1] * Poly::var(vx(k, l));
            symbolic_forms[i - 1][j - 1] = form;
        }
    std::map<VarId, Poly> assignment1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) assignment1[vx(i, j)] = symbolic_forms[i - 1][j - 1];

    const int big_d = f.total_degree();
    const Poly h = apply_yz_scaling(f.substitute(assignment1), big_d);

    // Lex priority: all lambda (row-major) over all xi (row-major) over y over z.
    std::vector<VarId> priority;
    for (const auto& [i, j] : ordered_pairs(n)) priority.push_back(vlambda(i, j));
    for (const auto& [i, j] : ordered_pairs(m)) priority.push_back(vxi(i, j));
    priority.push_back(kYScale);
    priority.push_back(kZScale);

    const auto [phi, expected_q] = lex_degenerate_to_lc(h, MonomialOrder::lex(priority));
    const Poly reduced = h.substitute_eps_powers(phi);
    res.q = reduced.eps_order();
    if (res.q != expected_q)
        throw VerificationFailed("degeneration order mismatch");
    res.slice = reduced.eps_slice(res.q);

    // Read sigma off the slice's multidegree: the row-degree vector of
    // (K_sigma|K_sigma) is the conjugate partition of sigma.
    const Multidegree md = multidegree_of(res.slice.terms().begin()->first, n, m);
    std::vector<int> conj = md.row_degrees;
    while (!conj.empty() && conj.back() == 0) conj.pop_back();
    std::vector<int> cd = md.col_degrees;
    while (!cd.empty() && cd.back() == 0) cd.pop_back();
    if (conj != cd) throw VerificationFailed("slice multidegree is not symmetric");
    for (std::size_t i = 0; i + 1 < conj.size(); ++i)
        if (conj[i] < conj[i + 1]) throw VerificationFailed("slice multidegree not a partition");
    res.sigma = Partition(conj).transposed();
    if (res.sigma.width() < r)
        throw VerificationFailed("reduced shape narrower than requested width");

    // alpha is the coefficient of the all-diagonal monomial, which appears
    // with coefficient exactly 1 in (K_sigma|K_sigma).
    std::vector<std::pair<VarId, int>> diag;
    for (std::size_t c = 0; c < conj.size(); ++c)
        diag.emplace_back(vx(static_cast<int>(c) + 1, static_cast<int>(c) + 1), conj[c]);
    const EpsScalar alpha_c = res.slice.coefficient(Monomial::from_factors(std::move(diag)));
    if (alpha_c.is_zero()) throw VerificationFailed("diagonal coefficient vanished");
    res.alpha = alpha_c.coeff(0);
    const Poly target =
        expand_bideterminant({k_tableau(res.sigma), k_tableau(res.sigma)}, n, m)
            .scaled(res.alpha);
    if (!(res.slice == target))
        throw VerificationFailed("slice is not a multiple of the initial bideterminant");

    // Assemble the eps-substituted linear forms and re-verify end to end.
    const std::vector<std::vector<EpsScalar>> phi_m = scalar_matrix(mt, phi);
    const std::vector<std::vector<EpsScalar>> phi_n = scalar_matrix(nt, phi);
    res.subst.n = n;
    res.subst.m = m;
    res.subst.forms = PolyMatrix(static_cast<std::size_t>(n),
                                 std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            Poly form;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= m; ++l) {
                    EpsScalar c = phi_m[i - 1][k - 1] * phi_n[l - 1][j - 1];
                    if (c.is_zero()) continue;
                    const std::int64_t shift =
                        checked_add(checked_mul(phi.at(kYScale), int_pow(big_d + 1, k)),
                                    checked_mul(phi.at(kZScale), int_pow(big_d + 1, l)));
                    form += Poly::var(vx(k, l)).scaled(c.shifted(shift));
                }
            res.subst.forms[i - 1][j - 1] = form;
        }
    if (!(f.substitute(res.subst.as_assignment()) == reduced))
        throw VerificationFailed("substitution does not reproduce the degenerated polynomial");

    const std::size_t nm = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    res.subst.coeff_matrix.assign(nm, std::vector<EpsScalar>(nm));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= m; ++l)
                    res.subst.coeff_matrix[static_cast<std::size_t>((i - 1) * m + (j - 1))]
                                          [static_cast<std::size_t>((k - 1) * m + (l - 1))] =
                        res.subst.forms[i - 1][j - 1].coefficient(Monomial::var(vx(k, l)));
    if (nm <= 12) {
        res.subst.det = eps_det(res.subst.coeff_matrix);
    } else {
        // Kronecker-product structure: the coefficient matrix factors as
        // (A (x) B^T) * diag(eps-powers), so det = det(A)^m det(B)^n * prod.
        EpsScalar d = EpsScalar(Rat(1));
        const EpsScalar da = eps_det(phi_m), db = eps_det(phi_n);
        for (int i = 0; i < m; ++i) d = d * da;
        for (int i = 0; i < n; ++i) d = d * db;
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= m; ++l)
                d = d.shifted(checked_add(checked_mul(phi.at(kYScale), int_pow(big_d + 1, k)),
                                          checked_mul(phi.at(kZScale), int_pow(big_d + 1, l))));
        res.subst.det = d;
    }
    if (res.subst.det.is_zero())
        throw VerificationFailed("substitution coefficient matrix is singular");
    return res;
}

} // namespace detlab
