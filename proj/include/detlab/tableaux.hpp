#pragma once

#include <compare>
#include <string>
#include <vector>

#include "detlab/errors.hpp"

namespace detlab {

// Partition: nonincreasing sequence of positive integers (empty allowed).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    int size() const;  // sum of parts
    bool empty() const { return parts_.empty(); }

    // Conjugate partition: sigma_hat[i] = #{j : sigma_j >= i+1}.
    Partition transposed() const;

    auto operator<=>(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Tableau of a given shape; row i has shape.parts()[i] entries.
// The standardness predicate used throughout: entries strictly increase
// along each row and are nondecreasing down each column.
class Tableau {
public:
    Tableau() = default;
    // Validates shape consistency and entry positivity.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    bool is_standard() const;
    int max_entry() const;  // 0 for the empty tableau
    // Content vector of length n: content[i-1] = multiplicity of entry i.
    std::vector<int> content(int n) const;

    auto operator<=>(const Tableau&) const = default;
    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

struct Bitableau {
    Tableau S;
    Tableau T;

    bool operator==(const Bitableau&) const = default;
    // Canonical emission order: shape lex-descending, then S, then T by
    // row-major lexicographic entry order.
    bool operator<(const Bitableau& o) const;
    std::string str() const;
};

// Initial tableau of shape sigma: row i = (1, ..., sigma_i).
Tableau k_tableau(const Partition& sigma);
// Final tableau of shape sigma with entries in [n]: row i = (n-sigma_i+1, ..., n).
Tableau kbar_tableau(const Partition& sigma, int n);

// S_i^j: in every row containing i but not j, replace i by j and re-sort.
// Returns the new tableau and h = number of rows changed.
std::pair<Tableau, int> sub_op(int i, int j, const Tableau& t);

// All standardness-satisfying tableaux of the given shape with entries in
// [n], in row-major lexicographic order.
std::vector<Tableau> enumerate_standard_tableaux(const Partition& shape, int n);

// Same, constrained to an exact content vector (content[i-1] = multiplicity
// of entry i); n = content.size().
std::vector<Tableau> enumerate_standard_tableaux_with_content(const Partition& shape,
                                                              const std::vector<int>& content);

// All standard bitableaux whose S-content is row_degrees (entries in [n],
// n = row_degrees.size()) and whose T-content is col_degrees, over all
// shapes, shapes in lex-descending order.  Empty if the degrees are
// incompatible.
std::vector<Bitableau> enumerate_standard_bitableaux(const std::vector<int>& row_degrees,
                                                     const std::vector<int>& col_degrees);

} // namespace detlab
