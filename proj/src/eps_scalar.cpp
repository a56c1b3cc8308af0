#include "detlab/eps_scalar.hpp"

#include <sstream>

namespace detlab {

EpsScalar::EpsScalar(const Rat& c) {
    if (c != 0) terms_[0] = c;
}

EpsScalar EpsScalar::eps(std::int64_t k, const Rat& c) {
    EpsScalar s;
    if (c != 0) s.terms_[k] = c;
    return s;
}

bool EpsScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool EpsScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool EpsScalar::is_monomial() const { return terms_.size() == 1; }

std::int64_t EpsScalar::eps_order() const {
    if (terms_.empty()) throw ZeroPolynomial("eps_order of zero");
    return terms_.begin()->first;
}

std::int64_t EpsScalar::max_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("max_exponent of zero");
    return terms_.rbegin()->first;
}

Rat EpsScalar::coeff(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

EpsScalar EpsScalar::operator-() const {
    EpsScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
    for (const auto& [k, c] : o.terms_) {
        Rat& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

EpsScalar EpsScalar::operator+(const EpsScalar& o) const {
    EpsScalar r = *this;
    r += o;
    return r;
}

EpsScalar EpsScalar::operator-(const EpsScalar& o) const {
    EpsScalar r = *this;
    r += -o;
    return r;
}

EpsScalar EpsScalar::operator*(const EpsScalar& o) const {
    EpsScalar r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Rat& slot = r.terms_[ka + kb];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(ka + kb);
        }
    return r;
}

EpsScalar EpsScalar::shifted(std::int64_t k, const Rat& c) const {
    EpsScalar r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e + k] = v * c;
    return r;
}

EpsScalar EpsScalar::monomial_inverse() const {
    if (terms_.size() != 1)
        throw ContractError("monomial_inverse: scalar is not an eps-monomial");
    const auto& [k, c] = *terms_.begin();
    return eps(-k, Rat(1) / c);
}

EpsScalar EpsScalar::div_exact(const EpsScalar& d) const {
    if (d.is_zero()) throw ContractError("div_exact: division by zero");
    if (is_zero()) return EpsScalar();
    // Long division from the top exponent down. If a = q*d exactly then
    // eps_order(q) = eps_order(a) - eps_order(d), which bounds the loop.
    const std::int64_t qmin = eps_order() - d.eps_order();
    const std::int64_t dtop = d.max_exponent();
    const Rat dlead = d.terms_.rbegin()->second;
    EpsScalar rem = *this, quot;
    while (!rem.is_zero()) {
        const std::int64_t shift = rem.max_exponent() - dtop;
        if (shift < qmin) throw ContractError("div_exact: inexact division");
        const Rat q = rem.terms_.rbegin()->second / dlead;
        quot.terms_[shift] = q;
        rem += -(d.shifted(shift, q));
    }
    return quot;
}

EpsScalar EpsScalar::eps_power_substituted(std::int64_t k) const {
    EpsScalar r;
    for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
    return r;
}

Rat EpsScalar::eval(const Rat& eps_value) const {
    Rat acc = 0;
    for (const auto& [k, c] : terms_) {
        if (k >= 0) {
            Rat p = 1;
            for (std::int64_t i = 0; i < k; ++i) p *= eps_value;
            acc += c * p;
        } else {
            if (eps_value == 0)
                throw ContractError("eval: negative eps-power at eps = 0");
            Rat p = 1;
            for (std::int64_t i = 0; i < -k; ++i) p *= eps_value;
            acc += c / p;
        }
    }
    return acc;
}

std::string EpsScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        if (k != 0) os << "*e^" << k;
    }
    return os.str();
}

} // namespace detlab
