#include "detlab/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace detlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw ShapeOutOfBounds("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeOutOfBounds("partition parts must be nonincreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transposed() const {
    std::vector<int> out;
    for (int i = 1; i <= width(); ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw ShapeOutOfBounds("tableau rows must be nonempty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw ShapeOutOfBounds("tableau row lengths must be nonincreasing");
        for (int e : rows_[i])
            if (e < 1) throw EntryOutOfBounds("tableau entries must be positive");
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows_[i].size(); ++j)
            if (rows_[i][j] >= rows_[i][j + 1]) return false;
        if (i > 0)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i][j] < rows_[i - 1][j]) return false;
    }
    return true;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int e : r) m = std::max(m, e);
    return m;
}

std::vector<int> Tableau::content(int n) const {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& r : rows_)
        for (int e : r) {
            if (e > n) throw EntryOutOfBounds("tableau entry exceeds content bound");
            ++c[static_cast<std::size_t>(e - 1)];
        }
    return c;
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << " / ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? " " : "") << rows_[i][j];
    }
    return rows_.empty() ? "()" : os.str();
}

bool Bitableau::operator<(const Bitableau& o) const {
    const Partition a = S.shape(), b = o.S.shape();
    if (a != b) return a > b;  // lex-descending shapes
    if (S != o.S) return S < o.S;
    return T < o.T;
}

std::string Bitableau::str() const { return "(" + S.str() + " | " + T.str() + ")"; }

Tableau k_tableau(const Partition& sigma) {
    std::vector<std::vector<int>> rows;
    for (int p : sigma.parts()) {
        std::vector<int> row(static_cast<std::size_t>(p));
        std::iota(row.begin(), row.end(), 1);
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

Tableau kbar_tableau(const Partition& sigma, int n) {
    if (sigma.width() > n || sigma.rows() > n)
        throw ShapeOutOfBounds("shape does not fit entries in [n]");
    std::vector<std::vector<int>> rows;
    for (int p : sigma.parts()) {
        std::vector<int> row(static_cast<std::size_t>(p));
        std::iota(row.begin(), row.end(), n - p + 1);
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

std::pair<Tableau, int> sub_op(int i, int j, const Tableau& t) {
    if (i == j) throw InputError("sub_op: indices must differ");
    auto rows = t.rows();
    int h = 0;
    for (auto& row : rows) {
        const bool has_i = std::find(row.begin(), row.end(), i) != row.end();
        const bool has_j = std::find(row.begin(), row.end(), j) != row.end();
        if (!has_i || has_j) continue;
        std::replace(row.begin(), row.end(), i, j);
        std::sort(row.begin(), row.end());
        ++h;
    }
    return {Tableau(std::move(rows)), h};
}

namespace {

// Backtracking over rows: each row is a strictly increasing sequence in [n],
// bounded below entrywise by the previous row (column monotonicity).  A null
// remaining-content pointer means unconstrained multiplicities.
void enumerate_rows(const std::vector<int>& parts, std::size_t row_idx, int n,
                    std::vector<std::vector<int>>& acc, std::vector<int>* remaining,
                    std::vector<Tableau>& out) {
    if (row_idx == parts.size()) {
        if (remaining != nullptr)
            for (int r : *remaining)
                if (r != 0) return;
        out.push_back(Tableau(acc));
        return;
    }
    const int len = parts[row_idx];
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(len));
    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            acc.push_back(row);
            enumerate_rows(parts, row_idx + 1, n, acc, remaining, out);
            acc.pop_back();
            return;
        }
        int lo = pos == 0 ? 1 : row[static_cast<std::size_t>(pos) - 1] + 1;
        if (row_idx > 0 && pos < static_cast<int>(acc[row_idx - 1].size()))
            lo = std::max(lo, acc[row_idx - 1][static_cast<std::size_t>(pos)]);
        // Strict increase to the right forces entry <= n - (len - pos - 1).
        const int hi = n - (len - pos - 1);
        for (int e = lo; e <= hi; ++e) {
            if (remaining != nullptr && (*remaining)[static_cast<std::size_t>(e - 1)] == 0)
                continue;
            if (remaining != nullptr) --(*remaining)[static_cast<std::size_t>(e - 1)];
            row.push_back(e);
            self(self, pos + 1);
            row.pop_back();
            if (remaining != nullptr) ++(*remaining)[static_cast<std::size_t>(e - 1)];
        }
    };
    extend(extend, 0);
}

// All partitions of total with parts <= max_part, lex-descending.
void partitions_of(int total, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of(total - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Tableau> enumerate_standard_tableaux(const Partition& shape, int n) {
    if (shape.empty()) return {Tableau()};
    if (shape.width() > n) return {};
    std::vector<Tableau> out;
    std::vector<std::vector<int>> acc;
    enumerate_rows(shape.parts(), 0, n, acc, nullptr, out);
    return out;
}

std::vector<Tableau> enumerate_standard_tableaux_with_content(const Partition& shape,
                                                              const std::vector<int>& content) {
    const int total = std::accumulate(content.begin(), content.end(), 0);
    if (shape.size() != total) return {};
    if (shape.empty()) return {Tableau()};
    const int n = static_cast<int>(content.size());
    if (shape.width() > n) return {};
    std::vector<Tableau> out;
    std::vector<std::vector<int>> acc;
    std::vector<int> remaining = content;
    enumerate_rows(shape.parts(), 0, n, acc, &remaining, out);
    return out;
}

std::vector<Bitableau> enumerate_standard_bitableaux(const std::vector<int>& row_degrees,
                                                     const std::vector<int>& col_degrees) {
    const int total = std::accumulate(row_degrees.begin(), row_degrees.end(), 0);
    if (total != std::accumulate(col_degrees.begin(), col_degrees.end(), 0)) return {};
    const int n = static_cast<int>(row_degrees.size());
    const int m = static_cast<int>(col_degrees.size());
    std::vector<Bitableau> out;
    if (total == 0) {
        out.push_back(Bitableau{Tableau(), Tableau()});
        return out;
    }
    std::vector<Partition> shapes;
    std::vector<int> acc;
    partitions_of(total, std::min(n, m), acc, shapes);
    for (const auto& shape : shapes) {
        auto ss = enumerate_standard_tableaux_with_content(shape, row_degrees);
        if (ss.empty()) continue;
        auto ts = enumerate_standard_tableaux_with_content(shape, col_degrees);
        for (const auto& s : ss)
            for (const auto& t : ts) out.push_back(Bitableau{s, t});
    }
    return out;
}

} // namespace detlab
