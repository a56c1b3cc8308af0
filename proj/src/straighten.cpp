#include "detlab/straighten.hpp"

#include <algorithm>
#include <set>

#include "detlab/linalg.hpp"

namespace detlab {

std::pair<int, int> infer_matrix_shape(const Poly& f) {
    int n = 0, m = 0;
    for (const auto& v : f.variables()) {
        if (v.fam != Family::x || v.idx.size() != 2 || v.idx[0] < 1 || v.idx[1] < 1)
            throw VariableMismatch("expected only matrix variables x[i,j], found " + v.str());
        n = std::max(n, v.idx[0]);
        m = std::max(m, v.idx[1]);
    }
    return {n, m};
}

Multidegree multidegree_of(const Monomial& mono, int n, int m) {
    Multidegree d;
    d.row_degrees.assign(static_cast<std::size_t>(n), 0);
    d.col_degrees.assign(static_cast<std::size_t>(m), 0);
    for (const auto& [v, e] : mono.factors()) {
        if (v.fam != Family::x || v.idx.size() != 2)
            throw VariableMismatch("expected matrix variable, found " + v.str());
        if (v.idx[0] > n || v.idx[1] > m)
            throw EntryOutOfBounds("variable index outside the declared matrix shape");
        d.row_degrees[static_cast<std::size_t>(v.idx[0] - 1)] += e;
        d.col_degrees[static_cast<std::size_t>(v.idx[1] - 1)] += e;
    }
    return d;
}

Poly expand_bideterminant(const Bitableau& b, int n, int m) {
    if (b.S.shape() != b.T.shape())
        throw ShapeOutOfBounds("bitableau sides must share a shape");
    if (b.S.max_entry() > n || b.T.max_entry() > m)
        throw EntryOutOfBounds("bitableau entry outside the matrix shape");
    Poly out(Rat(1));
    for (std::size_t k = 0; k < b.S.rows().size(); ++k) {
        const auto& rows = b.S.rows()[k];
        const auto& cols = b.T.rows()[k];
        std::vector<std::vector<Poly>> minor(rows.size(), std::vector<Poly>(cols.size()));
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t c = 0; c < cols.size(); ++c)
                minor[a][c] = Poly::var(vx(rows[a], cols[c]));
        out = out * ring_det(minor);
    }
    return out;
}

BidetExpr::BidetExpr(std::map<Bitableau, EpsScalar> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

int BidetExpr::min_width() const {
    if (terms_.empty()) throw ZeroPolynomial("min_width of the zero expression");
    int w = -1;
    for (const auto& [b, c] : terms_) {
        const int bw = b.S.shape().width();
        w = (w < 0) ? bw : std::min(w, bw);
    }
    return w;
}

Poly BidetExpr::expand(int n, int m) const {
    Poly out;
    for (const auto& [b, c] : terms_) out += expand_bideterminant(b, n, m).scaled(c);
    return out;
}

std::optional<std::vector<Rat>> coordinates_in_span(const std::vector<Poly>& span,
                                                    const Poly& component) {
    std::set<Monomial> monos;
    for (const auto& p : span)
        for (const auto& [mo, c] : p.terms()) monos.insert(mo);
    for (const auto& [mo, c] : component.terms()) monos.insert(mo);
    QMatrix a;
    QRow rhs;
    for (const auto& mo : monos) {
        QRow row;
        row.reserve(span.size());
        for (const auto& p : span) {
            const EpsScalar c = p.coefficient(mo);
            row.push_back(c.is_zero() ? Rat(0) : c.coeff(0));
        }
        a.push_back(std::move(row));
        const EpsScalar c = component.coefficient(mo);
        rhs.push_back(c.is_zero() ? Rat(0) : c.coeff(0));
    }
    return solve(a, rhs);
}

std::vector<std::int64_t> eps_exponents_of(const Poly& f) {
    std::set<std::int64_t> qs;
    for (const auto& [mo, c] : f.terms())
        for (const auto& [q, v] : c.terms()) qs.insert(q);
    return {qs.begin(), qs.end()};
}

namespace {

struct ComponentBasis {
    std::vector<Bitableau> bitableaux;
    std::vector<Poly> expansions;
};

ComponentBasis component_basis(const Multidegree& d, int n, int m) {
    ComponentBasis cb;
    cb.bitableaux = enumerate_standard_bitableaux(d.row_degrees, d.col_degrees);
    cb.expansions.reserve(cb.bitableaux.size());
    for (const auto& b : cb.bitableaux) cb.expansions.push_back(expand_bideterminant(b, n, m));
    return cb;
}

// Split a Q-coefficient polynomial into its multihomogeneous components.
std::map<Multidegree, Poly> components_of(const Poly& f, int n, int m) {
    std::map<Multidegree, Poly> comps;
    for (const auto& [mo, c] : f.terms()) {
        Poly& dst = comps[multidegree_of(mo, n, m)];
        dst += Poly::term(mo, c);
    }
    return comps;
}

} // namespace

BidetExpr straighten(const Poly& f) {
    const auto [n, m] = infer_matrix_shape(f);
    std::map<Bitableau, EpsScalar> out;
    std::map<Multidegree, ComponentBasis> cache;
    for (std::int64_t q : eps_exponents_of(f)) {
        const Poly slice = f.eps_slice(q);
        for (const auto& [d, comp] : components_of(slice, n, m)) {
            auto it = cache.find(d);
            if (it == cache.end()) it = cache.emplace(d, component_basis(d, n, m)).first;
            const ComponentBasis& cb = it->second;
            auto sol = coordinates_in_span(cb.expansions, comp);
            if (!sol)
                throw ContractError("standard bideterminants failed to span a component");
            for (std::size_t i = 0; i < cb.bitableaux.size(); ++i) {
                if ((*sol)[i] == 0) continue;
                EpsScalar& c = out[cb.bitableaux[i]];
                c += EpsScalar::eps(q, (*sol)[i]);
                if (c.is_zero()) out.erase(cb.bitableaux[i]);
            }
        }
    }
    return BidetExpr(std::move(out));
}

bool is_in_det_ideal(const Poly& f, int r) {
    if (f.is_zero()) return true;
    const BidetExpr e = straighten(f);
    return e.min_width() >= r;
}

namespace {

// All monomials in x[i,j] whose exponent matrix has the prescribed row and
// column sums (contingency tables), by cell-wise backtracking.
void exponent_tables(std::vector<int>& row_rem, std::vector<int>& col_rem, std::size_t i,
                     std::size_t j, std::vector<std::pair<VarId, int>>& acc,
                     std::vector<Monomial>& out) {
    const std::size_t n = row_rem.size(), m = col_rem.size();
    if (i == n) {
        for (int c : col_rem)
            if (c != 0) return;
        out.push_back(Monomial::from_factors(acc));
        return;
    }
    if (j == m) {
        if (row_rem[i] != 0) return;
        exponent_tables(row_rem, col_rem, i + 1, 0, acc, out);
        return;
    }
    const int hi = std::min(row_rem[i], col_rem[j]);
    for (int e = 0; e <= hi; ++e) {
        row_rem[i] -= e;
        col_rem[j] -= e;
        if (e > 0) acc.emplace_back(vx(static_cast<int>(i) + 1, static_cast<int>(j) + 1), e);
        exponent_tables(row_rem, col_rem, i, j + 1, acc, out);
        if (e > 0) acc.pop_back();
        row_rem[i] += e;
        col_rem[j] += e;
    }
}

std::vector<Monomial> monomials_of_multidegree(const Multidegree& d) {
    std::vector<int> rr = d.row_degrees, cr = d.col_degrees;
    std::vector<std::pair<VarId, int>> acc;
    std::vector<Monomial> out;
    exponent_tables(rr, cr, 0, 0, acc, out);
    return out;
}

void subsets_of_size(int n, int r, int first, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.push_back(acc);
        return;
    }
    for (int v = first; v <= n - (r - static_cast<int>(acc.size())) + 1; ++v) {
        acc.push_back(v);
        subsets_of_size(n, r, v + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

bool brute_force_membership(const Poly& f, int r, int degree_bound) {
    if (f.is_zero()) return true;
    if (f.total_degree() > degree_bound)
        throw DegreeBoundExceeded("polynomial degree exceeds the declared bound");
    const auto [n, m] = infer_matrix_shape(f);
    if (r > std::min(n, m)) return false;

    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> acc;
    subsets_of_size(n, r, 1, acc, row_sets);
    subsets_of_size(m, r, 1, acc, col_sets);
    struct Gen {
        Poly minor;
        std::vector<int> rows, cols;
    };
    std::vector<Gen> gens;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            std::vector<std::vector<Poly>> mtx(rs.size(), std::vector<Poly>(cs.size()));
            for (std::size_t a = 0; a < rs.size(); ++a)
                for (std::size_t b = 0; b < cs.size(); ++b)
                    mtx[a][b] = Poly::var(vx(rs[a], cs[b]));
            gens.push_back({ring_det(mtx), rs, cs});
        }

    for (std::int64_t q : eps_exponents_of(f)) {
        const Poly slice = f.eps_slice(q);
        for (const auto& [d, comp] : components_of(slice, n, m)) {
            // Complementary multidegree per generator, then all multiplier
            // monomials of that multidegree.
            std::vector<Poly> span;
            for (const auto& g : gens) {
                Multidegree rem = d;
                bool ok = true;
                for (int i : g.rows)
                    ok = ok && --rem.row_degrees[static_cast<std::size_t>(i - 1)] >= 0;
                for (int j : g.cols)
                    ok = ok && --rem.col_degrees[static_cast<std::size_t>(j - 1)] >= 0;
                if (!ok) continue;
                for (const auto& mult : monomials_of_multidegree(rem)) {
                    Poly prod;
                    for (const auto& [mo, c] : g.minor.terms()) prod.add_term(mult.times(mo), c);
                    span.push_back(std::move(prod));
                }
            }
            if (span.empty()) return false;
            if (!coordinates_in_span(span, comp)) return false;
        }
    }
    return true;
}

} // namespace detlab
