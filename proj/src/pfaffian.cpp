#include "detlab/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "detlab/errors.hpp"
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

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Occurrences of each index among a monomial's variables; every variable
// counts toward both of its indices.
std::vector<int> index_content(const Monomial& mono, int two_n) {
    std::vector<int> c(static_cast<std::size_t>(two_n), 0);
    for (const auto& [v, e] : mono.factors()) {
        if (v.idx[1] > two_n)
            throw EntryOutOfBounds("variable index outside the skew context");
        c[static_cast<std::size_t>(v.idx[0] - 1)] += e;
        c[static_cast<std::size_t>(v.idx[1] - 1)] += e;
    }
    return c;
}

// Content vectors read as conjugate shapes: nonincreasing after trimming
// trailing zeros, else nullopt.
std::optional<Partition> partition_from_content(const std::vector<int>& c) {
    std::vector<int> v = c;
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return std::nullopt;
    if (!v.empty() && v.back() <= 0) return std::nullopt;
    return Partition(v);
}

// The unique monomial of [K_sigma] pairing consecutive indices:
// prod_k x[2k-1,2k]^{sigma_hat_{2k}}.  Its coefficient in [K_sigma] is 1.
Monomial diag_matching_monomial(const Partition& sigma) {
    const Partition shat = sigma.transposed();
    std::vector<std::pair<VarId, int>> fs;
    for (int k = 1; 2 * k <= sigma.width(); ++k) {
        const int e = shat.parts()[static_cast<std::size_t>(2 * k - 1)];
        if (e > 0) fs.emplace_back(vx(2 * k - 1, 2 * k), e);
    }
    return Monomial::from_factors(fs);
}

bool all_parts_even(const Partition& p) {
    for (int s : p.parts())
        if (s % 2 != 0) return false;
    return true;
}

void even_partitions(int remaining, int maxpart, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    int start = std::min(maxpart, remaining);
    if (start % 2 != 0) --start;
    for (int p = start; p >= 2; p -= 2) {
        acc.push_back(p);
        even_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

struct PfBasis {
    std::vector<Tableau> tableaux;
    std::vector<Poly> expansions;
};

PfBasis pf_component_basis(const std::vector<int>& content, const SkewContext& ctx) {
    const int total = std::accumulate(content.begin(), content.end(), 0);
    std::vector<Partition> shapes;
    std::vector<int> acc;
    even_partitions(total, std::min(total, ctx.size()), acc, shapes);
    PfBasis basis;
    for (const auto& shape : shapes)
        for (const auto& t : enumerate_standard_tableaux_with_content(shape, content)) {
            basis.tableaux.push_back(t);
            basis.expansions.push_back(expand_standard_monomial(t, ctx));
        }
    return basis;
}

std::map<std::vector<int>, Poly> content_components(const Poly& slice, int two_n) {
    std::map<std::vector<int>, Poly> comps;
    for (const auto& [mono, c] : slice.terms()) comps[index_content(mono, two_n)].add_term(mono, c);
    return comps;
}

void subsets_rec(int n, int k, int first, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int v = first; v <= n - (k - static_cast<int>(acc.size())) + 1; ++v) {
        acc.push_back(v);
        subsets_rec(n, k, v + 1, acc, out);
        acc.pop_back();
    }
}

// All monomials over the i<j variables whose index content is exactly c,
// by backtracking over the pairs in row-major order.
void content_monomials_rec(std::vector<int>& rem, int i, int j,
                           std::vector<std::pair<VarId, int>>& acc, std::vector<Monomial>& out) {
    const int two_n = static_cast<int>(rem.size());
    if (i >= two_n) {
        for (int c : rem)
            if (c != 0) return;
        out.push_back(Monomial::from_factors(acc));
        return;
    }
    if (j > two_n) {
        // every pair containing i has been decided
        if (rem[static_cast<std::size_t>(i - 1)] != 0) return;
        content_monomials_rec(rem, i + 1, i + 2, acc, out);
        return;
    }
    const int hi =
        std::min(rem[static_cast<std::size_t>(i - 1)], rem[static_cast<std::size_t>(j - 1)]);
    for (int e = 0; e <= hi; ++e) {
        rem[static_cast<std::size_t>(i - 1)] -= e;
        rem[static_cast<std::size_t>(j - 1)] -= e;
        if (e > 0) acc.emplace_back(vx(i, j), e);
        content_monomials_rec(rem, i, j + 1, acc, out);
        if (e > 0) acc.pop_back();
        rem[static_cast<std::size_t>(i - 1)] += e;
        rem[static_cast<std::size_t>(j - 1)] += e;
    }
}

std::vector<Monomial> monomials_with_content(const std::vector<int>& c) {
    std::vector<int> rem = c;
    std::vector<std::pair<VarId, int>> acc;
    std::vector<Monomial> out;
    content_monomials_rec(rem, 1, 2, acc, out);
    return out;
}

EpsScalar to_scalar(const Poly& p) {
    if (p.is_zero()) return EpsScalar();
    if (p.term_count() != 1 || !p.terms().begin()->first.is_one())
        throw VerificationFailed("expected a scalar after weight substitution");
    return p.terms().begin()->second;
}

} // namespace

SkewContext::SkewContext(int size) : size_(size) {
    if (size < 2 || size % 2 != 0)
        throw OddOrder("skew context order must be a positive even number");
}

Poly SkewContext::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > size_ || j > size_)
        throw EntryOutOfBounds("skew entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") outside a " + std::to_string(size_) + "-order context");
    if (i == j) return Poly();
    if (i < j) return Poly::var(vx(i, j));
    return -Poly::var(vx(j, i));
}

PolyMatrix SkewContext::matrix() const {
    PolyMatrix m(static_cast<std::size_t>(size_), std::vector<Poly>(static_cast<std::size_t>(size_)));
    for (int i = 1; i <= size_; ++i)
        for (int j = 1; j <= size_; ++j) m[i - 1][j - 1] = entry(i, j);
    return m;
}

SkewContext skew_context_of(const Poly& f) {
    int hi = 0;
    for (const auto& v : f.variables()) {
        if (v.fam != Family::x || v.idx.size() != 2 || v.idx[0] < 1 || v.idx[0] >= v.idx[1])
            throw VariableMismatch(
                "expected strictly upper-triangular matrix variables x[i,j], found " + v.str());
        hi = std::max(hi, v.idx[1]);
    }
    return SkewContext(std::max(2, hi + hi % 2));
}

namespace {

Poly pf_expand(const PolyMatrix& m, const std::vector<int>& idx) {
    if (idx.empty()) return Poly(1);
    Poly out;
    for (std::size_t p = 1; p < idx.size(); ++p) {
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != p) rest.push_back(idx[k]);
        const Poly term = m[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[p])] *
                          pf_expand(m, rest);
        out += (p % 2 == 1) ? term : -term;
    }
    return out;
}

} // namespace

Poly pfaffian(const PolyMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("pfaffian needs a square matrix");
    if (n % 2 != 0) throw OddOrder("pfaffian of an odd-order matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i].is_zero()) throw NotSkew("nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(m[i][j] == -m[j][i])) throw NotSkew("matrix is not skew-symmetric");
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return pf_expand(m, idx);
}

Poly expand_standard_monomial(const Tableau& t, const SkewContext& ctx) {
    Poly out(1);
    for (const auto& row : t.rows()) {
        if (row.size() % 2 != 0)
            throw OddOrder("standard monomials need even row lengths");
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            if (row[k] >= row[k + 1])
                throw InputError("tableau rows must be strictly increasing");
        PolyMatrix sub(row.size(), std::vector<Poly>(row.size()));
        for (std::size_t a = 0; a < row.size(); ++a)
            for (std::size_t b = 0; b < row.size(); ++b) sub[a][b] = ctx.entry(row[a], row[b]);
        out = out * pfaffian(sub);
    }
    return out;
}

StdMonExpr::StdMonExpr(std::map<Tableau, EpsScalar> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
            continue;
        }
        if (!it->first.is_standard() || !all_parts_even(it->first.shape()))
            throw InputError("standard-monomial keys must be conjugate semistandard "
                             "with even row lengths");
        ++it;
    }
}

int StdMonExpr::width() const {
    if (terms_.empty()) throw ZeroPolynomial("width of the zero expression");
    int w = 0;
    for (const auto& [t, c] : terms_) w = std::max(w, t.shape().width());
    return w;
}

int StdMonExpr::min_width() const {
    if (terms_.empty()) throw ZeroPolynomial("min_width of the zero expression");
    int w = -1;
    for (const auto& [t, c] : terms_) {
        const int tw = t.shape().width();
        w = (w < 0) ? tw : std::min(w, tw);
    }
    return w;
}

Poly StdMonExpr::expand(const SkewContext& ctx) const {
    Poly out;
    for (const auto& [t, c] : terms_) out += expand_standard_monomial(t, ctx).scaled(c);
    return out;
}

StdMonExpr pfaff_straighten(const Poly& f) {
    const SkewContext ctx = skew_context_of(f);
    std::map<Tableau, EpsScalar> out;
    std::map<std::vector<int>, PfBasis> cache;
    for (std::int64_t q : eps_exponents_of(f)) {
        const Poly slice = f.eps_slice(q);
        for (const auto& [c, comp] : content_components(slice, ctx.size())) {
            auto it = cache.find(c);
            if (it == cache.end()) it = cache.emplace(c, pf_component_basis(c, ctx)).first;
            const PfBasis& basis = it->second;
            auto sol = coordinates_in_span(basis.expansions, comp);
            if (!sol) throw ContractError("standard monomials failed to span a component");
            for (std::size_t i = 0; i < basis.tableaux.size(); ++i) {
                if ((*sol)[i] == 0) continue;
                EpsScalar& coef = out[basis.tableaux[i]];
                coef += EpsScalar::eps(q, (*sol)[i]);
                if (coef.is_zero()) out.erase(basis.tableaux[i]);
            }
        }
    }
    return StdMonExpr(std::move(out));
}

bool is_in_pfaff_ideal(const Poly& f, int two_r, bool cross_check) {
    if (two_r < 2 || two_r % 2 != 0)
        throw InputError("sub-Pfaffian order must be a positive even number");
    if (f.is_zero()) return true;
    const bool by_width = pfaff_straighten(f).min_width() >= two_r;
    if (cross_check) {
        const SkewContext ctx = skew_context_of(f);
        if (ctx.size() <= 6 && f.total_degree() <= 4) {
            const bool by_oracle = pfaff_brute_force_membership(f, two_r, f.total_degree());
            if (by_oracle != by_width)
                throw MembershipDisagreement(
                    std::string("width criterion says ") + (by_width ? "member" : "non-member") +
                    " but the generator oracle says " + (by_oracle ? "member" : "non-member"));
        }
    }
    return by_width;
}

bool pfaff_brute_force_membership(const Poly& f, int two_r, int degree_bound) {
    if (two_r < 2 || two_r % 2 != 0)
        throw InputError("sub-Pfaffian order must be a positive even number");
    if (f.is_zero()) return true;
    if (f.total_degree() > degree_bound)
        throw DegreeBoundExceeded("polynomial degree exceeds the declared bound");
    const SkewContext ctx = skew_context_of(f);
    const int two_n = ctx.size();
    if (two_r > two_n) return false;

    struct Gen {
        Poly pf;
        std::vector<int> rows;
    };
    std::vector<Gen> gens;
    {
        std::vector<std::vector<int>> subsets;
        std::vector<int> acc;
        subsets_rec(two_n, two_r, 1, acc, subsets);
        for (const auto& rows : subsets) {
            PolyMatrix sub(rows.size(), std::vector<Poly>(rows.size()));
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (std::size_t b = 0; b < rows.size(); ++b)
                    sub[a][b] = ctx.entry(rows[a], rows[b]);
            gens.push_back({pfaffian(sub), rows});
        }
    }

    for (std::int64_t q : eps_exponents_of(f)) {
        const Poly slice = f.eps_slice(q);
        for (const auto& [c, comp] : content_components(slice, two_n)) {
            std::vector<Poly> span;
            for (const auto& g : gens) {
                std::vector<int> rem = c;
                bool ok = true;
                for (int i : g.rows)
                    ok = ok && --rem[static_cast<std::size_t>(i - 1)] >= 0;
                if (!ok) continue;
                for (const auto& mult : monomials_with_content(rem)) {
                    Poly prod;
                    for (const auto& [mo, coef] : g.pf.terms()) prod.add_term(mult.times(mo), coef);
                    span.push_back(std::move(prod));
                }
            }
            if (span.empty()) return false;
            if (!coordinates_in_span(span, comp)) return false;
        }
    }
    return true;
}

ReductionResult pfaff_reduce(const Poly& f, int r) {
    if (f.is_zero()) throw ZeroPolynomial("cannot reduce the zero polynomial");
    if (r < 1) throw InputError("sub-Pfaffian half-order must be positive");
    for (const auto& [mono, c] : f.terms())
        if (!c.is_rational()) throw InputError("reduction expects eps-free coefficients");
    const SkewContext ctx = skew_context_of(f);
    const int two_n = ctx.size();
    const int two_r = 2 * r;
    if (two_r > two_n)
        throw NotInIdeal("a " + std::to_string(two_n) + "-order context has no " +
                         std::to_string(two_r) + "-order principal sub-Pfaffians");
    const int pairs = two_n * (two_n - 1) / 2;

    // Fast path: f is already a single standard monomial c * [K_sigma].
    {
        const std::vector<int> c0 = index_content(f.terms().begin()->first, two_n);
        bool uniform = true;
        for (const auto& [mono, c] : f.terms())
            if (index_content(mono, two_n) != c0) {
                uniform = false;
                break;
            }
        std::optional<Partition> shat = uniform ? partition_from_content(c0) : std::nullopt;
        if (shat) {
            const Partition sigma = shat->transposed();
            if (all_parts_even(sigma) && sigma.width() >= two_r) {
                const EpsScalar alpha = f.coefficient(diag_matching_monomial(sigma));
                if (!alpha.is_zero() &&
                    f == expand_standard_monomial(k_tableau(sigma), ctx).scaled(alpha)) {
                    ReductionResult rr;
                    rr.subst.n = rr.subst.m = two_n;
                    rr.subst.forms = ctx.matrix();
                    rr.subst.coeff_matrix.assign(static_cast<std::size_t>(pairs),
                                                 std::vector<EpsScalar>(static_cast<std::size_t>(pairs)));
                    for (int p = 0; p < pairs; ++p) rr.subst.coeff_matrix[p][p] = EpsScalar(1);
                    rr.subst.det = EpsScalar(1);
                    rr.q = 0;
                    rr.alpha = alpha.coeff(0);
                    rr.sigma = sigma;
                    rr.slice = f;
                    return rr;
                }
            }
        }
    }

    if (pfaff_straighten(f).min_width() < two_r)
        throw NotInIdeal("straightened support is narrower than " + std::to_string(two_r));

    // Mixed-radix weights realizing the lexicographic order with the lambda
    // variables (row-major) above y.  Degree bounds: each lambda appears at
    // most twice per substituted variable (once in each factor of a 2x2
    // minor of P), the y-degree of a substituted variable is at most
    // (d+1)^{2n} + (d+1)^{2n-1}.
    const int d = f.total_degree();
    const std::int64_t dl = 2 * static_cast<std::int64_t>(d);
    const std::int64_t plo = int_pow(d + 1, two_n - 1);
    const std::int64_t dy = checked_mul(d, checked_add(plo, checked_mul(plo, d + 1)));
    std::map<VarId, std::int64_t> lam_sub;
    {
        std::int64_t acc = dy;  // y has weight 1 and degree bound dy
        for (int i = two_n - 1; i >= 1; --i)
            for (int j = two_n; j > i; --j) {
                const std::int64_t w = checked_add(acc, 1);
                lam_sub[vlambda(i, j)] = -w;
                acc = checked_add(acc, checked_mul(dl, w));
            }
    }

    // phi(M D): M is the ordered elementary product times the antidiagonal,
    // D the diagonal y-scaling, with lambda -> eps^{-w} and y -> eps^{-1}.
    const PolyMatrix msym = row_transform(two_n);
    std::vector<std::vector<EpsScalar>> phi(static_cast<std::size_t>(two_n),
                                            std::vector<EpsScalar>(static_cast<std::size_t>(two_n)));
    for (int i = 0; i < two_n; ++i)
        for (int k = 0; k < two_n; ++k)
            phi[i][k] = to_scalar(msym[i][k].substitute_eps_powers(lam_sub))
                            .shifted(-int_pow(d + 1, k + 1));

    PolyMatrix forms(static_cast<std::size_t>(two_n),
                     std::vector<Poly>(static_cast<std::size_t>(two_n)));
    std::map<VarId, Poly> assign;
    std::vector<std::vector<EpsScalar>> cm(static_cast<std::size_t>(pairs),
                                           std::vector<EpsScalar>(static_cast<std::size_t>(pairs)));
    {
        int row = 0;
        for (int i = 1; i <= two_n; ++i)
            for (int j = i + 1; j <= two_n; ++j, ++row) {
                Poly form;
                int col = 0;
                for (int k = 1; k <= two_n; ++k)
                    for (int l = k + 1; l <= two_n; ++l, ++col) {
                        const EpsScalar c =
                            phi[i - 1][k - 1] * phi[j - 1][l - 1] - phi[i - 1][l - 1] * phi[j - 1][k - 1];
                        cm[row][col] = c;
                        if (!c.is_zero()) form.add_term(Monomial::var(vx(k, l)), c);
                    }
                forms[i - 1][j - 1] = form;
                forms[j - 1][i - 1] = -form;
                assign[vx(i, j)] = std::move(form);
            }
    }

    const Poly reduced = f.substitute(assign);
    if (reduced.is_zero()) throw VerificationFailed("reduction produced zero");
    const std::int64_t q = reduced.eps_order();
    const Poly slice = reduced.eps_slice(q);

    const std::vector<int> c0 = index_content(slice.terms().begin()->first, two_n);
    for (const auto& [mono, c] : slice.terms())
        if (index_content(mono, two_n) != c0)
            throw VerificationFailed("leading slice is not content-homogeneous");
    const auto shat = partition_from_content(c0);
    if (!shat) throw VerificationFailed("leading slice content is not a partition");
    const Partition sigma = shat->transposed();
    if (!all_parts_even(sigma)) throw VerificationFailed("leading shape has an odd row");
    if (sigma.width() < two_r)
        throw VerificationFailed("leading shape is narrower than the ideal width");
    const EpsScalar alpha_s = slice.coefficient(diag_matching_monomial(sigma));
    if (alpha_s.is_zero())
        throw VerificationFailed("leading slice misses the diagonal matching monomial");
    const Rat alpha = alpha_s.coeff(0);
    if (!(slice == expand_standard_monomial(k_tableau(sigma), ctx).scaled(EpsScalar(alpha))))
        throw VerificationFailed("leading slice is not a single standard monomial");

    EpsScalar det;
    if (pairs <= 12) {
        det = ring_det(cm);
    } else {
        // The map on the i<j coordinates is the second compound of phi, so
        // its determinant is det(phi)^{2n-2} (Sylvester-Franke).
        const EpsScalar dp = ring_det(phi);
        det = EpsScalar(1);
        for (int i = 0; i < two_n - 2; ++i) det = det * dp;
    }
    if (det.is_zero()) throw VerificationFailed("coefficient matrix is singular");

    ReductionResult rr;
    rr.subst.n = rr.subst.m = two_n;
    rr.subst.forms = std::move(forms);
    rr.subst.coeff_matrix = std::move(cm);
    rr.subst.det = det;
    rr.q = q;
    rr.alpha = alpha;
    rr.sigma = sigma;
    rr.slice = slice;
    return rr;
}

PolyMatrix subpfaff_embed(const PolyMatrix& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw InputError("embedding needs a square matrix");
    // Interleaving permutation: position 2l-1 reads row l of the top block,
    // position 2l reads row l of the bottom block.
    std::vector<int> sg(static_cast<std::size_t>(2 * n + 1));
    for (int l = 1; l <= n; ++l) {
        sg[static_cast<std::size_t>(2 * l - 1)] = l;
        sg[static_cast<std::size_t>(2 * l)] = n + l;
    }
    PolyMatrix m(static_cast<std::size_t>(2 * n),
                 std::vector<Poly>(static_cast<std::size_t>(2 * n)));
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            const int a1 = sg[static_cast<std::size_t>(i)], a2 = sg[static_cast<std::size_t>(j)];
            if (a1 <= n && a2 > n)
                m[i - 1][j - 1] = a[a1 - 1][a2 - n - 1];
            else if (a1 > n && a2 <= n)
                m[i - 1][j - 1] = -a[a2 - 1][a1 - n - 1];
        }
    return m;
}

DepthThreeOracleCircuit pfaff_compose(const Poly& f, int r, const LayeredABP& g,
                                      int characteristic) {
    if (characteristic != 0)
        throw UnsupportedCharacteristic(
            "composition over characteristic " + std::to_string(characteristic) +
            " is not implemented: the top gate divides by the row count t");
    if (g.vertex_count() > r)
        throw TooManyVertices("target program has " + std::to_string(g.vertex_count()) +
                              " vertices; the order-" + std::to_string(2 * r) +
                              " sub-Pfaffian ideal only hides programs on at most " +
                              std::to_string(r));
    for (const auto& e : g.edges())
        for (const auto& [mono, c] : e.label.terms())
            if (!c.is_rational())
                throw InputError("target program labels must be eps-free");

    const ReductionResult rr = pfaff_reduce(f, r);
    const int two_n = rr.subst.n;
    const int half = two_n / 2;
    const int two_r = 2 * r;

    std::set<VarId> used = f.variables();
    for (const auto& v : g.variables()) used.insert(v);
    const int di = detail::fresh_aux_index(used, 1);
    used.insert(VarId{Family::aux, {di}});
    const int zi = detail::fresh_aux_index(used, di + 1);
    const VarId delta{Family::aux, {di}};
    const VarId zvar{Family::aux, {zi}};

    const LayeredABP ghat = homogenize_abp(g, zvar);
    const Poly ghat_poly = eval_abp(ghat);

    const PolyMatrix av = valiant_matrix(ghat);
    const int v = static_cast<int>(av.size());
    PolyMatrix ar(static_cast<std::size_t>(r), std::vector<Poly>(static_cast<std::size_t>(r)));
    const int off = r - v;
    for (int i = 0; i < off; ++i) ar[i][i] = Poly(1);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) ar[off + i][off + j] = av[i][j];
    if (r <= 8 && !(ring_det(ar) == Poly(1) + ghat_poly))
        throw VerificationFailed("cycle-cover determinant mismatch");

    PolyMatrix aext(static_cast<std::size_t>(half),
                    std::vector<Poly>(static_cast<std::size_t>(half)));
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
            if (i < r && j < r)
                aext[i][j] = ar[i][j];
            else if (i == j)
                aext[i][j] = Poly(1);
        }
    const PolyMatrix skew = subpfaff_embed(aext);

    std::map<VarId, Poly> emb;
    for (int k = 1; k <= two_n; ++k)
        for (int l = k + 1; l <= two_n; ++l) emb[vx(k, l)] = skew[k - 1][l - 1];
    PolyMatrix forms1(static_cast<std::size_t>(two_n));
    for (int i = 0; i < two_n; ++i) {
        forms1[i].reserve(static_cast<std::size_t>(two_n));
        for (int j = 0; j < two_n; ++j) forms1[i].push_back(rr.subst.forms[i][j].substitute(emb));
    }

    int t = 0;
    int sgn = 1;
    for (int s : rr.sigma.parts()) {
        if (s >= two_r) ++t;
        const std::int64_t k = s / 2;
        if ((k * (k - 1) / 2) % 2 != 0) sgn = -sgn;
    }
    const Rat alpha_eff = rr.alpha * Rat(sgn);

    return detail::fold_composition(f, two_n, two_n, forms1, g, ghat_poly, delta, zvar, rr.q,
                                    alpha_eff, t, rr.sigma);
}

} // namespace detlab
