#include "detlab/poly.hpp"

#include <sstream>

#include "detlab/budget.hpp"

namespace detlab {

// --- term budget --------------------------------------------------------

namespace term_budget {

namespace {
thread_local std::size_t g_cap = 0;  // 0 = unlimited
}

std::size_t current() { return g_cap; }

Scope::Scope(std::size_t cap) : prev_(g_cap) { g_cap = cap; }
Scope::~Scope() { g_cap = prev_; }

void check(std::size_t nterms) {
    if (g_cap != 0 && nterms > g_cap)
        throw BudgetExceeded("term budget exceeded: " + std::to_string(nterms) + " > " +
                             std::to_string(g_cap));
}

} // namespace term_budget

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > (static_cast<__int128>(1) << 62) || p < -(static_cast<__int128>(1) << 62))
        throw ExponentOverflow("eps exponent overflow in multiplication");
    return static_cast<std::int64_t>(p);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > (static_cast<__int128>(1) << 62) || s < -(static_cast<__int128>(1) << 62))
        throw ExponentOverflow("eps exponent overflow in addition");
    return static_cast<std::int64_t>(s);
}

} // namespace

// --- construction -------------------------------------------------------

Poly::Poly(const Rat& c) {
    EpsScalar s(c);
    if (!s.is_zero()) t_[Monomial()] = s;
}

Poly::Poly(const EpsScalar& c) {
    if (!c.is_zero()) t_[Monomial()] = c;
}

Poly Poly::var(const VarId& v, int exp) {
    Poly p;
    p.t_[Monomial::var(v, exp)] = EpsScalar(Rat(1));
    return p;
}

Poly Poly::term(const Monomial& m, const EpsScalar& c) {
    Poly p;
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

Poly poly_from_terms(std::map<Monomial, EpsScalar> t) {
    Poly p;
    for (auto& [m, c] : t)
        if (!c.is_zero()) p.t_.emplace(m, std::move(c));
    return p;
}

EpsScalar Poly::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? EpsScalar() : it->second;
}

void Poly::add_term(const Monomial& m, const EpsScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

// --- arithmetic ----------------------------------------------------------

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    term_budget::check(t_.size());
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r += -o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    std::size_t steps = 0;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            r.add_term(ma.times(mb), ca * cb);
            if ((++steps & 1023u) == 0) term_budget::check(r.t_.size());
        }
    term_budget::check(r.t_.size());
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw InputError("pow: negative exponent");
    Poly r(Rat(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::scaled(const EpsScalar& c) const {
    Poly r;
    for (const auto& [m, v] : t_) {
        EpsScalar s = v * c;
        if (!s.is_zero()) r.t_.emplace(m, std::move(s));
    }
    return r;
}

Poly Poly::scaled(const Rat& c) const { return scaled(EpsScalar(c)); }

Poly Poly::div_eps_monomial(const EpsScalar& d) const {
    return scaled(d.monomial_inverse());
}

// --- substitution ---------------------------------------------------------

Poly Poly::substitute(const std::map<VarId, Poly>& assignment) const {
    // Per-variable power cache: powers[v][e] = assignment(v)^e.
    std::map<VarId, std::vector<Poly>> powers;
    auto power = [&](const VarId& v, int e) -> const Poly& {
        auto& vec = powers[v];
        if (vec.empty()) vec.push_back(Poly(Rat(1)));
        while (static_cast<int>(vec.size()) <= e)
            vec.push_back(vec.back() * assignment.at(v));
        return vec[e];
    };
    Poly out;
    for (const auto& [m, c] : t_) {
        std::vector<std::pair<VarId, int>> fixed;
        Poly acc(c);
        for (const auto& [v, e] : m.factors()) {
            if (assignment.count(v))
                acc = acc * power(v, e);
            else
                fixed.emplace_back(v, e);
        }
        if (!fixed.empty()) {
            Poly shifted;
            Monomial base = Monomial::from_factors(std::move(fixed));
            for (const auto& [mm, cc] : acc.terms()) shifted.add_term(base.times(mm), cc);
            out += shifted;
        } else {
            out += acc;
        }
    }
    return out;
}

Poly Poly::substitute_eps_powers(const std::map<VarId, std::int64_t>& a) const {
    Poly out;
    for (const auto& [m, c] : t_) {
        std::int64_t shift = 0;
        std::vector<std::pair<VarId, int>> rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = a.find(v);
            if (it != a.end())
                shift = checked_add(shift, checked_mul(it->second, e));
            else
                rest.emplace_back(v, e);
        }
        out.add_term(Monomial::from_factors(std::move(rest)), c.shifted(shift));
    }
    return out;
}

Poly Poly::eps_rescaled(std::int64_t k) const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c.eps_power_substituted(k));
    return r;
}

// --- eps bookkeeping -------------------------------------------------------

Poly Poly::eps_slice(std::int64_t q) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        Rat v = c.coeff(q);
        if (v != 0) r.t_.emplace(m, EpsScalar(v));
    }
    return r;
}

std::int64_t Poly::eps_order() const {
    if (t_.empty()) throw ZeroPolynomial("eps_order of the zero polynomial");
    bool first = true;
    std::int64_t best = 0;
    for (const auto& [m, c] : t_) {
        std::int64_t o = c.eps_order();
        if (first || o < best) best = o;
        first = false;
    }
    return best;
}

// --- degrees and variables ---------------------------------------------------

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
}

int Poly::degree_in(const VarId& v) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
}

int Poly::degree_in(const std::set<VarId>& vars) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree_in(vars));
    return d;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.factors()) vs.insert(v);
    return vs;
}

std::pair<Monomial, Poly> Poly::leading(const MonomialOrder& order) const {
    if (t_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    std::set<VarId> active(order.variables().begin(), order.variables().end());
    bool have = false;
    Monomial best;
    for (const auto& [m, c] : t_) {
        Monomial part = m.restricted_to(active);
        if (!have || order.compare(part, best) > 0) {
            best = part;
            have = true;
        }
    }
    Poly coeff;
    for (const auto& [m, c] : t_)
        if (m.restricted_to(active) == best) coeff.add_term(m.without(active), c);
    return {best, coeff};
}

Rat Poly::eval(const std::map<VarId, Rat>& point, const Rat& eps_value) const {
    Rat acc = 0;
    for (const auto& [m, c] : t_) {
        Rat v = c.eval(eps_value);
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw InputError("eval: no value for variable " + var.str());
            for (int i = 0; i < e; ++i) v *= it->second;
        }
        acc += v;
    }
    return acc;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!m.is_one()) os << "*" << m.str();
    }
    return os.str();
}

} // namespace detlab
