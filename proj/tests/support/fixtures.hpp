#pragma once

// Shared test helpers: seeded random polynomial generators, small fixed
// branching programs, and exact rational-matrix utilities.

#include <vector>

#include "detlab/abp.hpp"
#include "detlab/linalg.hpp"
#include "detlab/poly.hpp"
#include "detlab/rng.hpp"
#include "detlab/straighten.hpp"

namespace detlab::testing {

// x[i,j] as a polynomial.
Poly X(int i, int j);

// Minor of the generic n x m matrix with the given row/column index sets.
Poly minor_poly(const std::vector<int>& rows, const std::vector<int>& cols,
                int n, int m);

// Full determinant over the n x n grid.
Poly det_n(int n);

// All k-subsets of {1..n}, ascending.
std::vector<std::vector<int>> combinations(int n, int k);

// Random sparse polynomial over the n x m grid with small rational
// coefficients; with_eps sprinkles eps^1 factors on some coefficients.
Poly random_poly(Rng& rng, int n, int m, int max_deg, int max_terms,
                 bool with_eps);

// Random element of the width-r determinantal ideal: a short combination
// of monomial cofactors times r x r minors.  Always nonzero and eps-free.
Poly random_ideal_element(Rng& rng, int n, int m, int r, int cof_deg,
                          int max_pieces);

QMatrix random_qmatrix(Rng& rng, int rows, int cols, int lo, int hi);
QMatrix qmul(const QMatrix& a, const QMatrix& b);
QMatrix qtranspose(const QMatrix& a);

// y1 * (y2 - 2) on three vertices.
LayeredABP path_abp();
// y1*y2 + 2*(y3 - 1) on four vertices (two parallel paths).
LayeredABP diamond_abp();

} // namespace detlab::testing
