#include "detlab/linalg.hpp"

#include <utility>

namespace detlab {

namespace {

using IRow = std::vector<Int>;
using IMatrix = std::vector<IRow>;

// Clear denominators row by row; row scaling preserves rank and solutions.
IMatrix scale_to_integers(const QMatrix& a) {
    IMatrix m;
    m.reserve(a.size());
    for (const auto& row : a) {
        Int l = 1;
        for (const auto& v : row) l = boost::multiprecision::lcm(l, rat_den(v));
        IRow out;
        out.reserve(row.size());
        for (const auto& v : row) out.push_back(rat_num(v) * (l / rat_den(v)));
        m.push_back(std::move(out));
    }
    return m;
}

// Fraction-free elimination; all divisions by the previous pivot are exact,
// which keeps intermediate entries at determinant-minor size.
int bareiss_rank(IMatrix m, bool parallel) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(m[p], m[r]);
        const std::size_t span = (rows - r - 1) * (cols - col);
        const long long n_below = static_cast<long long>(rows - r - 1);
#pragma omp parallel for schedule(dynamic) if (parallel && span >= 512)
        for (long long k = 0; k < n_below; ++k) {
            const std::size_t i = r + 1 + static_cast<std::size_t>(k);
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int rank(const QMatrix& a) { return bareiss_rank(scale_to_integers(a), true); }
int rank_serial(const QMatrix& a) { return bareiss_rank(scale_to_integers(a), false); }

std::optional<QRow> solve(const QMatrix& a, const QRow& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw InputError("solve: dimension mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    QMatrix m = a;
    QRow rhs = b;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rat inv = m[r][col];
        for (std::size_t j = col; j < cols; ++j) m[r][j] /= inv;
        rhs[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QRow x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

bool RowEchelon::insert(QRow row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = row[pivots_[i]];
        if (f == 0) continue;
        const Rat c = f;  // copy: row mutates below
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * rows_[i][j];
    }
    std::size_t lead = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) { lead = j; break; }
    if (lead == row.size()) return false;
    const Rat inv = row[lead];
    for (std::size_t j = lead; j < row.size(); ++j) row[j] /= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return true;
}

} // namespace detlab
