#include "detlab/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace detlab {

Monomial Monomial::var(const VarId& v, int exp) {
    Monomial m;
    if (exp != 0) m.e_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, int>> fs) {
    std::sort(fs.begin(), fs.end());
    Monomial m;
    for (auto& [v, e] : fs) {
        if (e == 0) continue;
        if (!m.e_.empty() && m.e_.back().first == v)
            m.e_.back().second += e;
        else
            m.e_.emplace_back(v, e);
    }
    std::erase_if(m.e_, [](const auto& p) { return p.second == 0; });
    return m;
}

int Monomial::exponent(const VarId& v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const auto& p, const VarId& w) { return p.first < w; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

int Monomial::degree_in(const std::set<VarId>& vars) const {
    int d = 0;
    for (const auto& [v, e] : e_)
        if (vars.count(v)) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m;
    m.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            m.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            m.e_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) m.e_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return m;
}

Monomial Monomial::restricted_to(const std::set<VarId>& vars) const {
    Monomial m;
    for (const auto& p : e_)
        if (vars.count(p.first)) m.e_.push_back(p);
    return m;
}

Monomial Monomial::without(const std::set<VarId>& vars) const {
    Monomial m;
    for (const auto& p : e_)
        if (!vars.count(p.first)) m.e_.push_back(p);
    return m;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : e_) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

} // namespace detlab
