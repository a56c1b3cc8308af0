/*
 * Structured variable identifiers.
 *
 * A variable is a family tag plus an integer index sequence: x[1,2] is the
 * matrix entry in row 1, column 2; y[3] an ABP input; w (no indices) a
 * scalar placeholder. The family order plus lexicographic index order
 * gives the canonical total order used for all deterministic output.
 */
#ifndef DETLAB_VARID_HPP
#define DETLAB_VARID_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace detlab {

enum class Family : std::uint8_t { x, y, z, lambda, xi, w, u, v, aux };

const char* family_name(Family f);

struct VarId {
    Family fam = Family::x;
    std::vector<int> idx;

    VarId() = default;
    VarId(Family f, std::vector<int> i) : fam(f), idx(std::move(i)) {}

    auto operator<=>(const VarId&) const = default;

    // "x[1,2]" with indices, bare family name without.
    std::string str() const;
    static VarId parse(const std::string& s);  // throws ParseError
};

inline VarId vx(int i, int j) { return VarId(Family::x, {i, j}); }
inline VarId vy(std::vector<int> idx) { return VarId(Family::y, std::move(idx)); }
inline VarId vz(std::vector<int> idx) { return VarId(Family::z, std::move(idx)); }
inline VarId vlambda(int i, int j) { return VarId(Family::lambda, {i, j}); }
inline VarId vxi(int i, int j) { return VarId(Family::xi, {i, j}); }

} // namespace detlab

#endif
