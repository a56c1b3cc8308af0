#pragma once

#include <map>
#include <string>
#include <vector>

#include "detlab/pit.hpp"

namespace detlab {

// One constraint "poly = 0" together with the fresh placeholder variable
// that stands for it inside a certificate.  Hard axioms form the
// unsatisfiable core; the non-hard remainder must be satisfiable on its
// own.
struct Axiom {
    std::string name;
    Poly poly;
    VarId placeholder;
    bool hard = false;
};

struct AxiomSystem {
    std::vector<Axiom> axioms;
    // Assignment to the ground variables satisfying every non-hard axiom;
    // the extraction lemma needs it to certify nonzeroness.
    std::map<VarId, Rat> witness;
    // When positive, the hard axioms lie in the determinantal ideal of
    // this width over the n x 2n arrangement [X Y], and extracted ideal
    // elements are checked against it by straightening.
    int det_width = 0;
};

// A refutation candidate: a polynomial over the ground variables and the
// placeholder variables of some axiom system.
struct IPSCertificate {
    Poly c;
    bool verified = false;
};

// The two defining checks, by exact symbolic substitution: C with every
// placeholder at zero is the zero polynomial, and C with every placeholder
// at its axiom is the constant 1.  Sets cert.verified and returns it.
// VariableMismatch if C mentions a variable that is neither a ground
// variable nor a placeholder of the system, or if the system itself is
// malformed (duplicate placeholders, placeholders inside axioms).
bool verify_certificate(IPSCertificate& cert, const AxiomSystem& sys);

// The unsatisfiable rank system over two n x n variable matrices X, Y:
//   hard:        det_r(E X E^T) = 0   one per condenser matrix E,
//                                     placeholders z[e]
//   satisfiable: XY - I_n = 0         placeholders w[i,j]
//   optional:    X.X - X = 0, Y.Y - Y = 0  (entrywise squares,
//                                     placeholders u[i,j] / v[i,j])
// The remainder's witness X = Y = I_n is recorded and checked.  Requires
// |c.matrices| >= 2r(n-r)+1 (CondenserTooSmall, via the shared equation
// builder, which also straighten-checks every hard axiom).
AxiomSystem build_rank_instance(int n, int r, const RankCondenser& c,
                                bool include_boolean);

// The inversion system { det_n(X) = 0 (hard, placeholder w),
// XY - I_n = 0 (placeholders z[i,j]) } with witness X = Y = I_n.
AxiomSystem det_inversion_system(int n);

// The explicit refutation 1 - det_n(Z + I_n) + w * det_n(Y) of the
// inversion system, returned already verified.
IPSCertificate det_inversion_refutation(int n);

// The extraction map of the lifting lemma: h = 1 - C with hard
// placeholders sent to zero and the remainder placeholders sent to their
// axioms.  h lies in the ideal generated by the hard axioms; nonzeroness
// is certified by evaluating at the recorded witness (the value is exactly
// 1), and when det_width is set the width of h is checked by straightening
// over the [X Y] arrangement.  CertificateInvalid if C does not verify;
// NoWitness if the witness is missing or does not satisfy the remainder.
Poly extract_ideal_element(const IPSCertificate& cert, const AxiomSystem& sys);

} // namespace detlab
