#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detlab/rational.hpp"

namespace detlab {

using QRow = std::vector<Rat>;
using QMatrix = std::vector<QRow>;

// Exact rank over Q via fraction-free (Bareiss) elimination on row-scaled
// integer matrices.  rank() runs the row-update kernel with OpenMP; the
// serial variant is kept as a reference for testing and benchmarking.
int rank(const QMatrix& a);
int rank_serial(const QMatrix& a);

// One exact solution of A x = b (free variables set to 0), or nullopt if the
// system is inconsistent.
std::optional<QRow> solve(const QMatrix& a, const QRow& b);

// Incremental row-echelon form over Q for rank accumulation with early exit.
// Rows are inserted one at a time; insert() returns true iff the rank grew.
class RowEchelon {
public:
    // Returns true if the row was independent of those seen so far.
    bool insert(QRow row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<QRow> rows_;            // reduced rows, leading entry 1
    std::vector<std::size_t> pivots_;   // pivot column of rows_[i]
};

// Determinant over an arbitrary commutative ring element type T supporting
// default construction (= 0), construction from Rat(1), +, *, unary -.
// Subset dynamic programming over column sets: O(2^n * n) ring operations,
// suitable for the small symbolic matrices used in the transforms.
template <class T>
T ring_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(Rat(1));
    for (const auto& row : m)
        if (row.size() != n) throw InputError("ring_det: matrix not square");
    if (n > 16) throw InputError("ring_det: matrix too large for subset expansion");
    // D[S] = det of the submatrix on rows 0..|S|-1 and column set S.
    std::vector<T> d(std::size_t(1) << n);
    d[0] = T(Rat(1));
    for (std::size_t s = 1; s < d.size(); ++s) {
        const int k = __builtin_popcountll(s);  // row index k-1 expands next
        T acc;
        int pos = 0;  // index of column j within S; cofactor sign is (-1)^{(k-1)+pos}
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s >> j & 1)) continue;
            T contrib = m[static_cast<std::size_t>(k - 1)][j] * d[s ^ (std::size_t(1) << j)];
            acc = ((k - 1 + pos) % 2 == 0) ? acc + contrib : acc + (-contrib);
            ++pos;
        }
        d[s] = acc;
    }
    return d[d.size() - 1];
}

} // namespace detlab
