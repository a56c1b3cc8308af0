#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detlab/degeneration.hpp"
#include "detlab/linalg.hpp"
#include "detlab/poly.hpp"

namespace detlab {

// Rank-r product map: the n*m coordinates of Y*Z for an n x r matrix Y of
// variables y[i,l] and an r x m matrix Z of variables z[l,j].  Its image is
// exactly the n x m matrices of rank at most r, so composing a polynomial
// with the map probes vanishing on that variety.
struct MatrixGenerator {
    int n = 0;
    int m = 0;
    int r = 0;

    // 1 <= n, 1 <= m, 0 <= r <= min(n, m); InputError otherwise.
    MatrixGenerator(int n_, int m_, int r_);
};

// coordinates[i-1][j-1] = sum_{l=1}^r y[i,l] * z[l,j]: every coordinate has
// exactly r degree-2 terms over 2r distinct variables (r = 0 gives zero).
PolyMatrix expand_generator(const MatrixGenerator& g);

// f with x[i,j] replaced by the (i,j) generator coordinate.  f must use
// only x variables (VariableMismatch) inside the n x m grid
// (EntryOutOfBounds).
Poly apply_generator(const Poly& f, const MatrixGenerator& g);

// Joint run of the two independent sides of the vanishing criterion: the
// symbolic composition f(Y*Z) with inner dimension r-1 (clamped to
// min(n, m), beyond which the image is already every matrix), and
// straightening membership of f in the width-r determinantal ideal.  The
// two booleans must agree (VerificationFailed otherwise); n, m are
// inferred from the x support of f.
struct VanishingReport {
    int n = 0;
    int m = 0;
    int r = 0;
    bool composition_zero = false;
    bool in_ideal = false;
};

VanishingReport vanishing_equivalence(const Poly& f, int r);

// Composition of square product maps: stage s replaces the seed variables
// of stage s-1, arranged row-major into a square matrix (trailing
// coordinates of the square are unused when the count is not a perfect
// square).  Stage s introduces variables y[s,i,l] and z[s,l,j]; the final
// coordinates live over the stage-k variables only.
struct RecursiveGenerator {
    int n = 0;                            // output arity
    int k = 0;                            // number of stages
    std::vector<MatrixGenerator> stages;  // outermost first
    std::vector<Poly> coordinates;        // the n composed coordinates
    int seed_length = 0;                  // stage-k variable count
    int degree = 0;                       // max coordinate degree (= 2^k)
};

// InconsistentSchedule if the schedule length differs from k, an entry is
// nonpositive or exceeds its stage arity, or the counting bound
// binom(seed_length + 2^k, 2^k) >= n fails.
RecursiveGenerator recursive_generator(int n, int k, const std::vector<int>& r_schedule);

// Folded-Vandermonde rank condenser: one r x n matrix per evaluation point
// alpha with entries W(alpha)[i][j] = (omega^i * alpha)^j, i in {1..r},
// j in {1..n}.
struct RankCondenser {
    int n = 0;
    int r = 0;
    Rat omega;
    std::vector<Rat> points;
    std::vector<QMatrix> matrices;
};

// BadOmega for omega in {0, +1, -1}; every other rational has infinite
// multiplicative order.  Points must be nonzero and distinct (InputError).
RankCondenser fs_condenser(int n, int r, const Rat& omega, const std::vector<Rat>& points);

// The equations det_r(E X E^T) over the n x n matrix X, one per condenser
// matrix E.  Requires at least 2r(n-r)+1 matrices (CondenserTooSmall);
// every output is checked against the width-r straightening criterion
// before it is returned.
std::vector<Poly> rank_lt_equations(int n, int r, const RankCondenser& c);

// Exact factorization a = Y * Z with Y of shape n x r and Z of shape r x m,
// from the column-space / reduced-row-echelon decomposition; ContractError
// if rank(a) > r.
std::pair<QMatrix, QMatrix> rank_factorization(const QMatrix& a, int r);

// Randomized nonzeroness probe: true iff some trial evaluation of f at
// integer points drawn from {lo..hi} is nonzero, with eps forced to a
// nonzero sample.  Deterministic for a fixed seed; the range size must
// exceed deg f and contain a nonzero value (InputError).
bool sz_test(const Poly& f, int trials, std::uint64_t seed, std::int64_t lo,
             std::int64_t hi);

} // namespace detlab
