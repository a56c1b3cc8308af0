#pragma once

#include "detlab/abp.hpp"
#include "detlab/degeneration.hpp"

namespace detlab {

// Depth-three circuit with a single oracle gate: nm bottom addition gates
// computing affine forms over the target's variables, one middle gate
// applying `oracle` (a polynomial in x[i,j]) to those forms, and a top
// addition gate mapping the result through out -> (out - c0) / c1.
struct DepthThreeOracleCircuit {
    int n = 0;
    int m = 0;
    PolyMatrix bottom;  // n x m affine forms
    Poly oracle;
    EpsScalar c0;
    EpsScalar c1;  // nonzero eps-monomial times a rational

    // Verification transcript.
    std::int64_t q = 0;        // order of the reduced bideterminant
    int t = 0;                 // number of shape rows of width >= r
    std::int64_t fold_n = 1;   // the exponent N of eps -> eps^N
    Partition sigma;
};

// Full symbolic evaluation: substitute the bottom forms into the oracle and
// apply the top affine map.
Poly eval_circuit(const DepthThreeOracleCircuit& c);

// Oracle circuit computing eval_abp(g) + O(eps) from any nonzero f in
// I_{n,m,r}, for g on at most r vertices with eps-free labels.  Only the
// characteristic-0 construction is implemented.
DepthThreeOracleCircuit compose_projection(const Poly& f, int r, const LayeredABP& g,
                                           int characteristic = 0);

// Instantiations with the clow-sequence determinant program and the iterated
// matrix product program as targets.
DepthThreeOracleCircuit proj_to_det(const Poly& f, int r, int t, int characteristic = 0);
DepthThreeOracleCircuit proj_to_imm(const Poly& f, int r, int w, int d, int characteristic = 0);

// Replace the oracle with an approximation h = oracle + O(aux[1]), folding
// the approximation track via aux[1] -> eps^N for the least N that keeps the
// circuit's eps^0 output slice intact.  Returns the new circuit and N.
std::pair<DepthThreeOracleCircuit, std::int64_t> substitute_oracle_with_approx(
    const DepthThreeOracleCircuit& c, const Poly& h);

namespace detail {

// Assignment x[i,j] -> forms[i-1][j-1] over a rows x cols grid.
std::map<VarId, Poly> matrix_assignment(int rows, int cols, const PolyMatrix& forms);

// Smallest k >= start with aux[k] unused.
int fresh_aux_index(const std::set<VarId>& used, int start);

// Shared tail of the composition constructions.  Given bottom forms with
// f(forms1) = eps^q * alpha_eff * (1 + ghat)^t + O(eps^{q+1}), scales the
// target program's variables by delta, sets the homogenizer zvar to delta,
// folds (eps, delta) -> (eps^N, eps) for the least exact N, and returns the
// circuit after verifying its eps^0 output slice equals eval_abp(g).
DepthThreeOracleCircuit fold_composition(const Poly& f, int rows, int cols,
                                         const PolyMatrix& forms1, const LayeredABP& g,
                                         const Poly& ghat_poly, const VarId& delta,
                                         const VarId& zvar, std::int64_t q,
                                         const Rat& alpha_eff, int t, const Partition& sigma);

} // namespace detail

} // namespace detlab
