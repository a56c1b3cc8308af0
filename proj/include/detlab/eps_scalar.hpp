/*
 * EpsScalar: a Laurent polynomial in the degeneration parameter eps over Rat.
 *
 * This is the coefficient ring for every polynomial in the project. All
 * constructions substitute eps-powers into polynomials and divide by
 * eps-monomials times rationals, and Laurent polynomials are closed under
 * those operations, so no power-series truncation is ever needed.
 *
 * Invariants: no zero coefficients are stored; the empty map is the
 * canonical zero; eps_order() is the minimum stored exponent.
 */
#ifndef DETLAB_EPS_SCALAR_HPP
#define DETLAB_EPS_SCALAR_HPP

#include <cstdint>
#include <map>
#include <string>

#include "detlab/rational.hpp"

namespace detlab {

class EpsScalar {
public:
    EpsScalar() = default;
    explicit EpsScalar(const Rat& c);
    explicit EpsScalar(long c) : EpsScalar(Rat(c)) {}

    // c * eps^k
    static EpsScalar eps(std::int64_t k, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when supported on eps^0 only (or zero).
    bool is_rational() const;
    // True when a single term c * eps^k.
    bool is_monomial() const;

    std::int64_t eps_order() const;  // throws ZeroPolynomial on zero
    std::int64_t max_exponent() const;  // throws ZeroPolynomial on zero
    Rat coeff(std::int64_t k) const;
    const std::map<std::int64_t, Rat>& terms() const { return terms_; }

    EpsScalar operator-() const;
    EpsScalar operator+(const EpsScalar& o) const;
    EpsScalar operator-(const EpsScalar& o) const;
    EpsScalar operator*(const EpsScalar& o) const;
    EpsScalar& operator+=(const EpsScalar& o);

    // Multiply by c * eps^k.
    EpsScalar shifted(std::int64_t k, const Rat& c = Rat(1)) const;
    // Inverse of a monomial scalar; throws ContractError otherwise.
    EpsScalar monomial_inverse() const;
    // Exact division (univariate long division); throws ContractError if
    // the quotient is not a Laurent polynomial. Used by fraction-free
    // elimination over this ring, where divisions are exact by construction.
    EpsScalar div_exact(const EpsScalar& d) const;
    // eps -> eps^k (k >= 1): multiplies every exponent by k.
    EpsScalar eps_power_substituted(std::int64_t k) const;

    Rat eval(const Rat& eps_value) const;  // eps_value != 0 required if
                                           // negative exponents are present

    bool operator==(const EpsScalar& o) const { return terms_ == o.terms_; }
    auto operator<=>(const EpsScalar& o) const { return terms_ <=> o.terms_; }

    std::string str() const;

private:
    std::map<std::int64_t, Rat> terms_;
};

} // namespace detlab

#endif
