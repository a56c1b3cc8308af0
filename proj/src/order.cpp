#include "detlab/order.hpp"

#include "detlab/errors.hpp"

namespace detlab {

MonomialOrder MonomialOrder::lex(std::vector<VarId> priority) {
    MonomialOrder o;
    o.vars_ = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::weight(std::vector<VarId> vars,
                                    std::vector<std::vector<std::int64_t>> rows) {
    for (const auto& r : rows)
        if (r.size() != vars.size())
            throw InputError("weight order: row length does not match variable count");
    MonomialOrder o;
    o.vars_ = std::move(vars);
    o.rows_ = std::move(rows);
    return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& row : rows_) {
        std::int64_t wa = 0, wb = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            wa += row[i] * a.exponent(vars_[i]);
            wb += row[i] * b.exponent(vars_[i]);
        }
        if (wa != wb) return wa <=> wb;
    }
    for (const VarId& v : vars_) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

} // namespace detlab
