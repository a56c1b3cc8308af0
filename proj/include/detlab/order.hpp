/*
 * Monomial orders over a declared (active) variable list.
 *
 * Two kinds:
 *   - lexicographic: a priority sequence of variables, highest first;
 *   - weight: a sequence of integer weight vectors over the declared
 *     variables, compared row by row, ties broken by a final
 *     lexicographic stage over the same variables.
 *
 * Both satisfy the monomial-order axioms on monomials over the declared
 * variables (1 is smallest; multiplication preserves the order), which the
 * tests verify by brute force.
 */
#ifndef DETLAB_ORDER_HPP
#define DETLAB_ORDER_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "detlab/monomial.hpp"

namespace detlab {

class MonomialOrder {
public:
    static MonomialOrder lex(std::vector<VarId> priority);
    static MonomialOrder weight(std::vector<VarId> vars,
                                std::vector<std::vector<std::int64_t>> rows);

    // Compares the restrictions of a and b to the declared variables.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    const std::vector<VarId>& variables() const { return vars_; }

private:
    std::vector<VarId> vars_;
    std::vector<std::vector<std::int64_t>> rows_;  // empty for pure lex
};

} // namespace detlab

#endif
