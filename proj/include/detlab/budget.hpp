/*
 * Term-count budget for symbolic expansions.
 *
 * The degeneration and composition pipelines can blow up in intermediate
 * term count. A thread-local cap lets callers bound that growth and fail
 * cleanly with BudgetExceeded instead of exhausting memory. A cap of 0
 * means unlimited. Budgets are per-thread and must not be toggled inside
 * OpenMP regions (no exceptions may cross a parallel boundary).
 */
#ifndef DETLAB_BUDGET_HPP
#define DETLAB_BUDGET_HPP

#include <cstddef>

#include "detlab/errors.hpp"

namespace detlab::term_budget {

std::size_t current();

// RAII: installs a cap for the current thread, restores the old one on exit.
class Scope {
public:
    explicit Scope(std::size_t cap);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

private:
    std::size_t prev_;
};

// Throws BudgetExceeded when a cap is installed and nterms exceeds it.
void check(std::size_t nterms);

} // namespace detlab::term_budget

#endif
