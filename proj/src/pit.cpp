#include "detlab/pit.hpp"

#include <algorithm>
#include <set>

#include "detlab/errors.hpp"
#include "detlab/rng.hpp"
#include "detlab/straighten.hpp"

namespace detlab {

namespace {

// Coordinates of the square stage-s product map, over y[s,i,l] / z[s,l,j].
PolyMatrix stage_coordinates(int a, int r, int stage) {
    PolyMatrix out(static_cast<std::size_t>(a),
                   std::vector<Poly>(static_cast<std::size_t>(a)));
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= a; ++j) {
            Poly acc;
            for (int l = 1; l <= r; ++l)
                acc += Poly::var(vy({stage, i, l})) * Poly::var(vz({stage, l, j}));
            out[i - 1][j - 1] = acc;
        }
    return out;
}

// Stage-s seed variables in canonical order: all of Y, then all of Z.
std::vector<VarId> stage_seeds(int a, int r, int stage) {
    std::vector<VarId> seeds;
    seeds.reserve(2 * static_cast<std::size_t>(a) * static_cast<std::size_t>(r));
    for (int i = 1; i <= a; ++i)
        for (int l = 1; l <= r; ++l) seeds.push_back(vy({stage, i, l}));
    for (int l = 1; l <= r; ++l)
        for (int j = 1; j <= a; ++j) seeds.push_back(vz({stage, l, j}));
    return seeds;
}

} // namespace

MatrixGenerator::MatrixGenerator(int n_, int m_, int r_) : n(n_), m(m_), r(r_) {
    if (n < 1 || m < 1) throw InputError("generator needs positive matrix dimensions");
    if (r < 0 || r > std::min(n, m))
        throw InputError("generator inner dimension must satisfy 0 <= r <= min(n, m)");
}

PolyMatrix expand_generator(const MatrixGenerator& g) {
    PolyMatrix out(static_cast<std::size_t>(g.n),
                   std::vector<Poly>(static_cast<std::size_t>(g.m)));
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.m; ++j) {
            Poly acc;
            for (int l = 1; l <= g.r; ++l)
                acc += Poly::var(vy({i, l})) * Poly::var(vz({l, j}));
            out[i - 1][j - 1] = acc;
        }
    return out;
}

Poly apply_generator(const Poly& f, const MatrixGenerator& g) {
    std::map<VarId, Poly> assignment;
    const PolyMatrix coords = expand_generator(g);
    for (const VarId& v : f.variables()) {
        if (v.fam != Family::x || v.idx.size() != 2)
            throw VariableMismatch("generator input must use only x[i,j] variables");
        const int i = v.idx[0];
        const int j = v.idx[1];
        if (i < 1 || i > g.n || j < 1 || j > g.m)
            throw EntryOutOfBounds("variable " + v.str() + " outside the generator grid");
        assignment[v] = coords[i - 1][j - 1];
    }
    return f.substitute(assignment);
}

VanishingReport vanishing_equivalence(const Poly& f, int r) {
    if (r < 1) throw InputError("vanishing equivalence needs r >= 1");
    VanishingReport report;
    report.r = r;
    if (f.is_zero()) {
        report.composition_zero = true;
        report.in_ideal = true;
        return report;
    }
    const auto [n, m] = infer_matrix_shape(f);
    report.n = n;
    report.m = m;
    if (n == 0) {  // constant polynomial: nonzero, and only 0 lies in the ideal
        report.composition_zero = false;
        report.in_ideal = false;
        return report;
    }
    // Inner dimensions beyond min(n, m) add nothing to the image, so the
    // composition side clamps r - 1 to the full-rank case.
    const int inner = std::min(r - 1, std::min(n, m));
    report.composition_zero = apply_generator(f, MatrixGenerator(n, m, inner)).is_zero();
    report.in_ideal = is_in_det_ideal(f, r);
    if (report.composition_zero != report.in_ideal)
        throw VerificationFailed(
            "generator vanishing and ideal membership disagree");
    return report;
}

RecursiveGenerator recursive_generator(int n, int k, const std::vector<int>& r_schedule) {
    if (n < 1) throw InputError("recursive generator needs a positive output arity");
    if (k < 1 || k > 20) throw InputError("stage count out of range");
    if (static_cast<int>(r_schedule.size()) != k)
        throw InconsistentSchedule("schedule length must equal the stage count");

    RecursiveGenerator out;
    out.n = n;
    out.k = k;
    int need = n;  // coordinates consumed by the layer above
    for (int s = 1; s <= k; ++s) {
        int a = 1;
        while (a * a < need) ++a;
        const int r = r_schedule[static_cast<std::size_t>(s - 1)];
        if (r < 1 || r > a)
            throw InconsistentSchedule("stage " + std::to_string(s) +
                                       " rank must lie in 1.." + std::to_string(a));
        const PolyMatrix grid = stage_coordinates(a, r, s);
        std::vector<Poly> flat;
        flat.reserve(static_cast<std::size_t>(need));
        for (int i = 0; i < a && static_cast<int>(flat.size()) < need; ++i)
            for (int j = 0; j < a && static_cast<int>(flat.size()) < need; ++j)
                flat.push_back(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        if (s == 1) {
            out.coordinates = std::move(flat);
        } else {
            const std::vector<VarId> seeds = stage_seeds(out.stages.back().n,
                                                         out.stages.back().r, s - 1);
            std::map<VarId, Poly> assignment;
            for (std::size_t t = 0; t < seeds.size(); ++t) assignment[seeds[t]] = flat[t];
            for (Poly& c : out.coordinates) c = c.substitute(assignment);
        }
        out.stages.emplace_back(a, a, r);
        need = 2 * a * r;
    }
    out.seed_length = need;
    for (const Poly& c : out.coordinates)
        out.degree = std::max(out.degree, c.total_degree());

    const int d = 1 << k;
    if (int_binomial(out.seed_length + d, d) < n)
        throw InconsistentSchedule("seed length too small for the output arity");
    return out;
}

RankCondenser fs_condenser(int n, int r, const Rat& omega, const std::vector<Rat>& points) {
    if (n < 1 || r < 1 || r > n) throw InputError("condenser needs 1 <= r <= n");
    if (omega == Rat(0) || omega == Rat(1) || omega == Rat(-1))
        throw BadOmega("omega must generate an infinite multiplicative group");
    RankCondenser c;
    c.n = n;
    c.r = r;
    c.omega = omega;
    c.points = points;
    std::set<Rat> seen;
    for (const Rat& alpha : points) {
        if (alpha == Rat(0)) throw InputError("evaluation points must be nonzero");
        if (!seen.insert(alpha).second)
            throw InputError("evaluation points must be distinct");
        QMatrix w(static_cast<std::size_t>(r), QRow(static_cast<std::size_t>(n)));
        Rat opow(1);
        for (int i = 1; i <= r; ++i) {
            opow *= omega;
            const Rat base = opow * alpha;
            Rat entry(1);
            for (int j = 1; j <= n; ++j) {
                entry *= base;
                w[i - 1][j - 1] = entry;
            }
        }
        c.matrices.push_back(std::move(w));
    }
    return c;
}

std::vector<Poly> rank_lt_equations(int n, int r, const RankCondenser& c) {
    if (n < 1 || r < 1 || r > n) throw InputError("rank equations need 1 <= r <= n");
    if (c.n != n || c.r != r) throw InputError("condenser parameters do not match");
    const long needed = 2L * r * (n - r) + 1;
    if (static_cast<long>(c.matrices.size()) < needed)
        throw CondenserTooSmall("need at least " + std::to_string(needed) +
                                " condenser matrices, have " +
                                std::to_string(c.matrices.size()));
    std::vector<Poly> out;
    out.reserve(c.matrices.size());
    for (const QMatrix& e : c.matrices) {
        if (static_cast<int>(e.size()) != r)
            throw InputError("condenser matrix must have r rows");
        for (const QRow& row : e)
            if (static_cast<int>(row.size()) != n)
                throw InputError("condenser matrix must have n columns");
        PolyMatrix exet(static_cast<std::size_t>(r),
                        std::vector<Poly>(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Poly acc;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        const Rat q = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                                      e[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
                        if (q != 0) acc.add_term(Monomial::var(vx(a + 1, b + 1)), EpsScalar(q));
                    }
                exet[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
            }
        Poly det = ring_det(exet);
        if (!is_in_det_ideal(det, r))
            throw VerificationFailed("condenser equation escaped the width-r ideal");
        out.push_back(std::move(det));
    }
    return out;
}

std::pair<QMatrix, QMatrix> rank_factorization(const QMatrix& a, int r) {
    if (r < 0) throw InputError("factor width must be nonnegative");
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
    for (const QRow& row : a)
        if (row.size() != ncols) throw InputError("ragged matrix");

    QMatrix rref = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && rref[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rref[piv], rref[row]);
        const Rat lead = rref[row][col];
        for (std::size_t j = col; j < ncols; ++j) rref[row][j] /= lead;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || rref[i][col] == 0) continue;
            const Rat factor = rref[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rref[i][j] -= factor * rref[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() > static_cast<std::size_t>(r))
        throw ContractError("matrix rank exceeds the requested factor width");

    QMatrix y(nrows, QRow(static_cast<std::size_t>(r), Rat(0)));
    QMatrix z(static_cast<std::size_t>(r), QRow(ncols, Rat(0)));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        for (std::size_t i = 0; i < nrows; ++i) y[i][k] = a[i][pivots[k]];
        for (std::size_t j = 0; j < ncols; ++j) z[k][j] = rref[k][j];
    }
    return {std::move(y), std::move(z)};
}

bool sz_test(const Poly& f, int trials, std::uint64_t seed, std::int64_t lo,
             std::int64_t hi) {
    if (hi < lo) throw InputError("empty sample range");
    if (trials < 0) throw InputError("negative trial count");
    if (lo == 0 && hi == 0) throw InputError("range contains no nonzero eps value");
    const std::int64_t size = hi - lo + 1;
    if (f.total_degree() >= 0 && size <= f.total_degree())
        throw InputError("sample range must exceed the degree");

    Rng rng(seed);
    const std::set<VarId> vars = f.variables();
    for (int t = 0; t < trials; ++t) {
        Rng trial = rng.fork(static_cast<std::uint64_t>(t));
        std::map<VarId, Rat> point;
        for (const VarId& v : vars) point[v] = trial.rat(lo, hi);
        const Rat eps_value = trial.nonzero_rat(lo, hi);
        if (f.eval(point, eps_value) != 0) return true;
    }
    return false;
}

} // namespace detlab
