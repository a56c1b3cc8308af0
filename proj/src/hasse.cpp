#include "detlab/hasse.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "detlab/errors.hpp"
#include "detlab/linalg.hpp"

namespace detlab {

namespace {

// Inserts every monomial a <= factors (componentwise) with |a| <= cap.
void divisors_into(const std::vector<std::pair<VarId, int>>& factors,
                   std::size_t i, int cap,
                   std::vector<std::pair<VarId, int>>& acc,
                   std::set<Monomial>& out) {
    if (i == factors.size()) {
        out.insert(Monomial::from_factors(acc));
        return;
    }
    const auto& [v, e] = factors[i];
    const int top = std::min(e, cap);
    for (int k = 0; k <= top; ++k) {
        if (k > 0) acc.emplace_back(v, k);
        divisors_into(factors, i + 1, cap - k, acc, out);
        if (k > 0) acc.pop_back();
    }
}

bool eps_free(const Poly& f) {
    for (const auto& [mono, coef] : f.terms())
        if (!coef.is_rational()) return false;
    return true;
}

// Rank over Q(eps) by Bareiss elimination on Laurent scalars.  After step k
// every entry is a (k+1)-minor of the input, so dividing by the previous
// pivot is exact over the ring.
int eps_rank(std::vector<std::vector<EpsScalar>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    EpsScalar prev(Rat(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).div_exact(prev);
            m[i][c] = EpsScalar();
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int deriv_order(const DerivIndex& a) {
    int order = 0;
    for (const auto& [v, e] : a) {
        if (e < 0) throw InputError("derivative index entries must be nonnegative");
        order += e;
    }
    return order;
}

Poly hasse(const Poly& f, const DerivIndex& a) {
    deriv_order(a);
    Poly out;
    for (const auto& [mono, coef] : f.terms()) {
        Rat mult(1);
        bool vanishes = false;
        for (const auto& [v, e] : a) {
            if (e == 0) continue;
            const int b = mono.exponent(v);
            if (b < e) {
                vanishes = true;
                break;
            }
            mult = mult * Rat(int_binomial(b, e));
        }
        if (vanishes) continue;
        std::vector<std::pair<VarId, int>> fac;
        for (const auto& [v, e] : mono.factors()) {
            const auto it = a.find(v);
            const int rem = e - (it == a.end() ? 0 : it->second);
            if (rem > 0) fac.emplace_back(v, rem);
        }
        out.add_term(Monomial::from_factors(std::move(fac)), coef.shifted(0, mult));
    }
    return out;
}

int deriv_space_dim(const Poly& f, std::optional<int> order) {
    if (f.is_zero()) throw ZeroPolynomial("deriv_space_dim: zero polynomial");
    if (order && *order < 0) throw InputError("deriv_space_dim: negative order");
    const int cap = order ? std::min(*order, f.total_degree()) : f.total_degree();

    std::set<Monomial> indices;
    std::vector<std::pair<VarId, int>> acc;
    for (const auto& [mono, coef] : f.terms())
        divisors_into(mono.factors(), 0, cap, acc, indices);

    std::vector<Poly> derivs;
    derivs.reserve(indices.size());
    std::map<Monomial, std::size_t> col;
    for (const Monomial& idx : indices) {
        DerivIndex a;
        for (const auto& [v, e] : idx.factors()) a[v] = e;
        Poly d = hasse(f, a);
        if (d.is_zero()) continue;
        for (const auto& [m, c] : d.terms()) col.emplace(m, col.size());
        derivs.push_back(std::move(d));
    }

    if (eps_free(f)) {
        QMatrix mat(derivs.size(), QRow(col.size(), Rat(0)));
        for (std::size_t i = 0; i < derivs.size(); ++i)
            for (const auto& [m, c] : derivs[i].terms())
                mat[i][col.at(m)] = c.coeff(0);
        return rank(mat);
    }
    std::vector<std::vector<EpsScalar>> mat(derivs.size(),
                                            std::vector<EpsScalar>(col.size()));
    for (std::size_t i = 0; i < derivs.size(); ++i)
        for (const auto& [m, c] : derivs[i].terms()) mat[i][col.at(m)] = c;
    return eps_rank(std::move(mat));
}

SubstitutionDimReport dim_under_substitution(const Poly& f, const PolyMatrix& a) {
    if (f.is_zero()) throw ZeroPolynomial("dim_under_substitution: zero polynomial");
    const std::set<VarId> varset = f.variables();
    const std::vector<VarId> vars(varset.begin(), varset.end());
    const std::size_t n = vars.size();
    if (a.size() != n)
        throw InputError("substitution matrix size must match the variable count");
    bool rational = true;
    for (const auto& row : a) {
        if (row.size() != n) throw InputError("substitution matrix must be square");
        for (const Poly& entry : row) {
            if (!entry.is_zero() && !entry.variables().empty())
                throw InputError("substitution matrix entries must be scalar");
            rational = rational && eps_free(entry);
        }
    }

    SubstitutionDimReport report;
    if (rational) {
        QMatrix qa(n, QRow(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                qa[i][j] = a[i][j].is_zero() ? Rat(0) : a[i][j].terms().begin()->second.coeff(0);
        report.invertible = rank(qa) == static_cast<int>(n);
    } else {
        report.invertible = !ring_det(a).is_zero();
    }

    std::map<VarId, Poly> assignment;
    for (std::size_t i = 0; i < n; ++i) {
        Poly image;
        for (std::size_t j = 0; j < n; ++j) image += a[i][j] * Poly::var(vars[j]);
        assignment[vars[i]] = image;
    }
    const Poly g = f.substitute(assignment);

    for (int d = 0; d <= f.total_degree(); ++d) {
        const int dim_f = deriv_space_dim(f, d);
        const int dim_g = g.is_zero() ? 0 : deriv_space_dim(g, d);
        report.dim_original.push_back(dim_f);
        report.dim_substituted.push_back(dim_g);
        if (dim_g > dim_f)
            throw VerificationFailed("derivative dimension grew under a linear substitution");
        if (report.invertible && dim_g != dim_f)
            throw VerificationFailed("derivative dimension changed under an invertible substitution");
    }
    return report;
}

} // namespace detlab
