#pragma once

#include <map>
#include <optional>

#include "detlab/poly.hpp"
#include "detlab/tableaux.hpp"

namespace detlab {

// Multihomogeneous degree of a polynomial in the x[i,j] variables:
// row_degrees[i-1] = total degree in row-i variables, likewise columns.
struct Multidegree {
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;

    auto operator<=>(const Multidegree&) const = default;
};

// A finite combination of standard bitableaux with Laurent-eps coefficients.
class BidetExpr {
public:
    BidetExpr() = default;
    explicit BidetExpr(std::map<Bitableau, EpsScalar> terms);

    const std::map<Bitableau, EpsScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Smallest width (sigma_1) over the support; throws on the zero expression.
    int min_width() const;
    // Weighted sum of expanded bideterminants over an n x m variable matrix.
    Poly expand(int n, int m) const;

private:
    std::map<Bitableau, EpsScalar> terms_;
};

// The bideterminant (S|T): product over bitableau rows of the minor of the
// generic n x m matrix X with the listed row and column indices.
Poly expand_bideterminant(const Bitableau& b, int n, int m);

// Unique expansion of f (a polynomial in the x variables) over standard
// bitableaux, computed per multihomogeneous component by exact linear
// algebra against the enumerated standard basis.
BidetExpr straighten(const Poly& f);

// Membership in the determinantal ideal I_{n,m,r}: every bitableau in the
// straightened support has width >= r.
bool is_in_det_ideal(const Poly& f, int r);

// Independent membership oracle: decides whether f lies in the span of
// { monomial * (r x r minor) } up to the given total degree bound.
bool brute_force_membership(const Poly& f, int r, int degree_bound);

// Ambient matrix dimensions (n, m) inferred from the x variables of f.
std::pair<int, int> infer_matrix_shape(const Poly& f);

// Multidegree of a multihomogeneous polynomial component.
Multidegree multidegree_of(const Monomial& mono, int n, int m);

// Coordinates of an eps-free polynomial in an eps-free spanning set, by
// exact linear algebra over the union of supports; nullopt if outside.
std::optional<std::vector<Rat>> coordinates_in_span(const std::vector<Poly>& span,
                                                    const Poly& component);

// Sorted eps-exponents appearing in any coefficient of f.
std::vector<std::int64_t> eps_exponents_of(const Poly& f);

} // namespace detlab
