#pragma once

#include <map>
#include <vector>

#include "detlab/poly.hpp"
#include "detlab/straighten.hpp"

namespace detlab {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix mat_identity(int k);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

// Invertible linear change of the x variables with Laurent-eps coefficients.
struct LinearSubst {
    int n = 0;
    int m = 0;
    // forms[i][j] = the image of x[i+1,j+1]; homogeneous linear in x.
    PolyMatrix forms;
    // (nm) x (nm) coefficient matrix, rows indexed by form, columns by
    // variable, both in row-major order, plus its nonzero determinant.
    std::vector<std::vector<EpsScalar>> coeff_matrix;
    EpsScalar det;

    std::map<VarId, Poly> as_assignment() const;
};

struct ReductionResult {
    LinearSubst subst;
    std::int64_t q = 0;
    Rat alpha;
    Partition sigma;
    Poly slice;  // the verified eps^q coefficient of the substituted input
};

// x_v -> eps^{d_v} * x_v for every v in d (variables are kept).
Poly eps_scale_variables(const Poly& f, const std::map<VarId, std::int64_t>& d);

// Single Newton-polytope degeneration: returns eps^lambda * f(eps^{-u} x)
// and lambda = max over the support of <a, u>.
std::pair<Poly, std::int64_t> single_degenerate(const Poly& f,
                                                const std::map<VarId, std::int64_t>& u);

// Iterated degeneration onto the face cut out by the given weight stages,
// with the stage-folding exponent computed exactly from the Laurent
// representation.  Returns (d, m) with eps^m f(eps^{d} x) = face + O(eps).
std::pair<std::map<VarId, std::int64_t>, std::int64_t> multi_degenerate(
    const Poly& f, const std::vector<std::map<VarId, std::int64_t>>& stages);

// One-shot realization for a lexicographic order on its variable list:
// substituting v -> eps^{d_v} (variables removed) sends f to
// eps^m * LC(f) + O(eps^{m+1}) where LC is taken in (other vars)[active vars].
std::pair<std::map<VarId, std::int64_t>, std::int64_t> lex_degenerate_to_lc(
    const Poly& f, const MonomialOrder& order);

// Ordered products of elementary matrices and the anti-diagonal that drive
// every standard bideterminant to its row-initial / column-initial form.
PolyMatrix row_transform(int n);   // entries in Q[lambda]
PolyMatrix col_transform(int m);   // entries in Q[xi]

// Full reduction of a nonzero f in I_{n,m,r} to a single bideterminant:
// substituting the returned forms into f gives
// eps^q * alpha * (K_sigma|K_sigma)(X) + O(eps^{q+1}) with sigma_1 >= r.
// The post-condition is verified internally before returning.
ReductionResult reduce_to_single_bideterminant(const Poly& f, int r);

} // namespace detlab
