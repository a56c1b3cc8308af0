#pragma once

#include <optional>
#include <vector>

#include "detlab/degeneration.hpp"
#include "detlab/poly.hpp"

namespace detlab {

// Exponent vector of a Hasse derivative: VarId -> exponent, entries >= 0.
// A zero entry is equivalent to the variable being absent.
using DerivIndex = std::map<VarId, int>;

int deriv_order(const DerivIndex& a);

// The a-th Hasse derivative of f: on a monomial x^b it yields
// prod_v binom(b_v, a_v) * x^(b-a), zero whenever some a_v exceeds b_v.
// Over Q this is the iterated partial derivative scaled by 1/a!, and it
// sends distinct monomials to distinct monomials, so a derivative of f is
// zero exactly when no support monomial of f dominates a.
Poly hasse(const Poly& f, const DerivIndex& a);

// Dimension of span{ hasse(f, a) : |a| <= order } over the fraction field
// Q(eps).  Omitting `order` imposes no bound (every derivative of order
// beyond deg f vanishes, so this equals the order = deg f dimension).
//
// Only indices dominated by some support monomial of f are enumerated; all
// other derivatives vanish.  The rank is computed by fraction-free
// elimination: rational inputs go through the row-scaled integer kernel,
// and coefficients with genuine eps-dependence are eliminated directly over
// the Laurent ring, where Bareiss divisions stay exact.
//
// Throws ZeroPolynomial on f == 0 and InputError on a negative order.
int deriv_space_dim(const Poly& f, std::optional<int> order = std::nullopt);

// Derivative-space dimensions of f before and after the linear change of
// variables v_i -> sum_j a[i][j] * v_j on the variables of f in increasing
// VarId order.  Entries of `a` must be constant polynomials (rational or
// eps-Laurent scalars) and `a` must be square of size #variables(f).
//
// For every order d = 0 .. deg f the substituted dimension never exceeds
// the original, and the two are equal when `a` is invertible; a violated
// comparison throws VerificationFailed.
struct SubstitutionDimReport {
    bool invertible = false;
    std::vector<int> dim_original;     // index d = 0 .. deg f
    std::vector<int> dim_substituted;  // same indexing; 0 if f(Ax) == 0
};

SubstitutionDimReport dim_under_substitution(const Poly& f, const PolyMatrix& a);

} // namespace detlab
