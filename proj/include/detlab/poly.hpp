/*
 * Poly: sparse multivariate polynomial with EpsScalar coefficients.
 *
 * Values are immutable in spirit: every operation returns a new canonical
 * polynomial (no zero coefficients stored), so equality is structural and
 * sharing across threads is safe. Multiplication and substitution respect
 * the thread-local term budget (budget.hpp).
 */
#ifndef DETLAB_POLY_HPP
#define DETLAB_POLY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "detlab/eps_scalar.hpp"
#include "detlab/monomial.hpp"
#include "detlab/order.hpp"

namespace detlab {

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c) : Poly(Rat(c)) {}
    explicit Poly(const EpsScalar& c);
    static Poly var(const VarId& v, int exp = 1);
    static Poly term(const Monomial& m, const EpsScalar& c);

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, EpsScalar>& terms() const { return t_; }
    EpsScalar coefficient(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly pow(int k) const;  // k >= 0

    Poly scaled(const EpsScalar& c) const;
    Poly scaled(const Rat& c) const;
    // Divide every coefficient by a monomial scalar c * eps^k.
    Poly div_eps_monomial(const EpsScalar& d) const;

    // Ring-homomorphic image; unassigned variables stay fixed.
    Poly substitute(const std::map<VarId, Poly>& assignment) const;
    // Fast path for v -> eps^k substitutions (exponents may be negative).
    Poly substitute_eps_powers(const std::map<VarId, std::int64_t>& a) const;
    // eps -> eps^k (k >= 1) inside every coefficient.
    Poly eps_rescaled(std::int64_t k) const;

    // The eps-free polynomial of eps^q-coefficients.
    Poly eps_slice(std::int64_t q) const;
    std::int64_t eps_order() const;  // throws ZeroPolynomial on zero

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const VarId& v) const;
    int degree_in(const std::set<VarId>& vars) const;
    std::set<VarId> variables() const;

    // The order-maximal monomial in the declared variables and its
    // coefficient, a polynomial over the remaining variables.
    // Throws ZeroPolynomial on zero input.
    std::pair<Monomial, Poly> leading(const MonomialOrder& order) const;

    Rat eval(const std::map<VarId, Rat>& point, const Rat& eps_value) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    std::string str() const;

    // In-place accumulation of a single term, erasing on cancellation.
    void add_term(const Monomial& m, const EpsScalar& c);

private:
    std::map<Monomial, EpsScalar> t_;
    friend Poly poly_from_terms(std::map<Monomial, EpsScalar> t);
};

Poly poly_from_terms(std::map<Monomial, EpsScalar> t);

} // namespace detlab

#endif
