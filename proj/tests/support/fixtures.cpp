#include "support/fixtures.hpp"

#include <utility>

namespace detlab::testing {

Poly X(int i, int j) { return Poly::var(vx(i, j)); }

Poly minor_poly(const std::vector<int>& rows, const std::vector<int>& cols,
                int n, int m) {
    return expand_bideterminant(Bitableau{Tableau({rows}), Tableau({cols})}, n, m);
}

Poly det_n(int n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    return minor_poly(all, all, n, n);
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace {

Monomial random_monomial(Rng& rng, int n, int m, int max_deg) {
    const int d = static_cast<int>(rng.uniform(0, max_deg));
    std::vector<std::pair<VarId, int>> fs;
    for (int i = 0; i < d; ++i)
        fs.emplace_back(vx(static_cast<int>(rng.uniform(1, n)),
                           static_cast<int>(rng.uniform(1, m))),
                        1);
    return Monomial::from_factors(std::move(fs));
}

} // namespace

Poly random_poly(Rng& rng, int n, int m, int max_deg, int max_terms,
                 bool with_eps) {
    for (;;) {
        Poly f;
        const int t = static_cast<int>(rng.uniform(1, max_terms));
        for (int i = 0; i < t; ++i) {
            const Rat c = rng.nonzero_rat(-9, 9) / rng.nonzero_rat(1, 4);
            const std::int64_t k = with_eps && rng.uniform(0, 2) == 0 ? 1 : 0;
            f.add_term(random_monomial(rng, n, m, max_deg), EpsScalar::eps(k, c));
        }
        if (!f.is_zero()) return f;
    }
}

Poly random_ideal_element(Rng& rng, int n, int m, int r, int cof_deg,
                          int max_pieces) {
    const std::vector<std::vector<int>> rsets = combinations(n, r);
    const std::vector<std::vector<int>> csets = combinations(m, r);
    for (;;) {
        Poly f;
        const int pieces = static_cast<int>(rng.uniform(1, max_pieces));
        for (int p = 0; p < pieces; ++p) {
            const auto& rows = rsets[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(rsets.size()) - 1))];
            const auto& cols = csets[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(csets.size()) - 1))];
            const Poly cof = Poly::term(random_monomial(rng, n, m, cof_deg),
                                        EpsScalar(rng.nonzero_rat(-5, 5)));
            f += cof * minor_poly(rows, cols, n, m);
        }
        if (!f.is_zero()) return f;
    }
}

QMatrix random_qmatrix(Rng& rng, int rows, int cols, int lo, int hi) {
    QMatrix a(static_cast<std::size_t>(rows), QRow(static_cast<std::size_t>(cols)));
    for (auto& row : a)
        for (auto& v : row) v = rng.rat(lo, hi);
    return a;
}

QMatrix qmul(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    QMatrix out(n, QRow(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

QMatrix qtranspose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix out(a[0].size(), QRow(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

LayeredABP path_abp() {
    using E = LayeredABP::Edge;
    return LayeredABP({{"s"}, {"m"}, {"t"}},
                      {E{"s", "m", Poly::var(vy({1}))},
                       E{"m", "t", Poly::var(vy({2})) - Poly(2)}});
}

LayeredABP diamond_abp() {
    using E = LayeredABP::Edge;
    return LayeredABP({{"s"}, {"a", "b"}, {"t"}},
                      {E{"s", "a", Poly::var(vy({1}))},
                       E{"s", "b", Poly(2)},
                       E{"a", "t", Poly::var(vy({2}))},
                       E{"b", "t", Poly::var(vy({3})) - Poly(1)}});
}

} // namespace detlab::testing
