/*
 * Sparse monomials: a sorted association VarId -> positive exponent.
 * The empty monomial is 1. operator<=> is the canonical structural order
 * used for map keys and deterministic serialization; it is not a monomial
 * order in the algebraic sense (see order.hpp for those).
 */
#ifndef DETLAB_MONOMIAL_HPP
#define DETLAB_MONOMIAL_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "detlab/varid.hpp"

namespace detlab {

class Monomial {
public:
    Monomial() = default;
    static Monomial var(const VarId& v, int exp = 1);
    // From an unsorted (VarId, exp) list; merges duplicates, drops zeros.
    static Monomial from_factors(std::vector<std::pair<VarId, int>> fs);

    bool is_one() const { return e_.empty(); }
    int exponent(const VarId& v) const;
    int total_degree() const;
    int degree_in(const std::set<VarId>& vars) const;
    const std::vector<std::pair<VarId, int>>& factors() const { return e_; }

    Monomial times(const Monomial& o) const;
    // Restriction to / removal of a variable set (for regrouping).
    Monomial restricted_to(const std::set<VarId>& vars) const;
    Monomial without(const std::set<VarId>& vars) const;

    auto operator<=>(const Monomial&) const = default;

    std::string str() const;  // "x[1,1]^2*y[3]"; "1" for the empty monomial

private:
    std::vector<std::pair<VarId, int>> e_;  // sorted by VarId, exps > 0
};

} // namespace detlab

#endif
