#pragma once

#include "detlab/oracle_compose.hpp"

namespace detlab {

// 2n x 2n skew-symmetric variable matrix: only x[i,j] with i < j is ever a
// stored variable; mirror entries are negations and the diagonal is zero.
class SkewContext {
public:
    explicit SkewContext(int size);  // even, >= 2
    int size() const { return size_; }
    Poly entry(int i, int j) const;  // 1-based; x[i,j], -x[j,i], or 0
    PolyMatrix matrix() const;

private:
    int size_;
};

// Smallest even-order context covering every index of f's variables; also
// validates that f mentions only upper-triangular matrix variables.
SkewContext skew_context_of(const Poly& f);

// Pfaffian by first-row expansion.  The matrix must be skew-symmetric of
// even order (checked symbolically); Pf(M)^2 = det(M).
Poly pfaffian(const PolyMatrix& m);

// Product over the tableau's rows of the principal sub-Pfaffians indexed by
// the row entries; rows must be strictly increasing with even lengths.
Poly expand_standard_monomial(const Tableau& t, const SkewContext& ctx);

// A finite combination of standard monomials: keys are conjugate
// semistandard tableaux with all row lengths even.
class StdMonExpr {
public:
    StdMonExpr() = default;
    explicit StdMonExpr(std::map<Tableau, EpsScalar> terms);

    const std::map<Tableau, EpsScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int width() const;      // largest sigma_1 over the support; throws on zero
    int min_width() const;  // smallest sigma_1 over the support; throws on zero
    Poly expand(const SkewContext& ctx) const;

private:
    std::map<Tableau, EpsScalar> terms_;
};

// Unique expansion of f over standard monomials, per eps-exponent and
// index-content component, by exact linear algebra.
StdMonExpr pfaff_straighten(const Poly& f);

// Membership in the ideal generated by the two_r x two_r principal
// sub-Pfaffians, decided by the width criterion (min_width >= two_r).  On
// small instances the verdict is cross-checked against the bounded-degree
// generator oracle; disagreement raises MembershipDisagreement.
bool is_in_pfaff_ideal(const Poly& f, int two_r, bool cross_check = true);

// Independent membership oracle: can f be written as a combination of
// two_r x two_r principal sub-Pfaffians with polynomial cofactors of total
// product degree at most degree_bound?
bool pfaff_brute_force_membership(const Poly& f, int two_r, int degree_bound);

// Reduction of a nonzero f in the 2r x 2r sub-Pfaffian ideal to
// eps^q * alpha * [K_sigma](X) + O(eps^{q+1}) with sigma_1 >= 2r, realized
// by the congruence X -> P X P^T on the i<j variables.  The returned
// LinearSubst holds the full skew-completed 2n x 2n forms; its coefficient
// matrix is indexed by the i<j pairs in row-major order.
ReductionResult pfaff_reduce(const Poly& f, int r);

// 2n x 2n skew matrix whose leading principal 2k x 2k sub-Pfaffians equal
// (-1)^{binom(k,2)} det(A_{[k],[k]}) for every k in [n].
PolyMatrix subpfaff_embed(const PolyMatrix& a);

// Oracle circuit computing eval_abp(g) + O(eps) from any nonzero f in the
// 2r x 2r sub-Pfaffian ideal, for g on at most r vertices with eps-free
// labels.  The matching signs are folded into the top gate.
DepthThreeOracleCircuit pfaff_compose(const Poly& f, int r, const LayeredABP& g,
                                      int characteristic = 0);

} // namespace detlab
