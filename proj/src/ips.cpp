#include "detlab/ips.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "detlab/errors.hpp"
#include "detlab/linalg.hpp"
#include "detlab/straighten.hpp"

namespace detlab {

namespace {

struct SystemView {
    std::set<VarId> ground;
    std::set<VarId> placeholders;
};

// Checks the variable partition of a system: placeholders are pairwise
// distinct and never occur inside an axiom polynomial.
SystemView validate_system(const AxiomSystem& sys) {
    SystemView view;
    for (const Axiom& ax : sys.axioms) {
        if (!view.placeholders.insert(ax.placeholder).second)
            throw VariableMismatch("duplicate placeholder variable " +
                                   ax.placeholder.str());
        for (const VarId& v : ax.poly.variables()) view.ground.insert(v);
    }
    for (const Axiom& ax : sys.axioms)
        if (view.ground.count(ax.placeholder))
            throw VariableMismatch("placeholder " + ax.placeholder.str() +
                                   " occurs inside an axiom polynomial");
    return view;
}

PolyMatrix var_matrix(Family fam, int n) {
    PolyMatrix m(static_cast<std::size_t>(n),
                 std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Poly::var(VarId(fam, {i + 1, j + 1}));
    return m;
}

// The n^2 entries of XY - I_n as polynomials, row-major.
std::vector<Poly> inversion_entries(int n) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly p;
            for (int l = 1; l <= n; ++l)
                p += Poly::var(vx(i, l)) * Poly::var(vy({l, j}));
            if (i == j) p = p - Poly(1);
            out.push_back(std::move(p));
        }
    return out;
}

void record_identity_witness(AxiomSystem& sys, int n) {
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rat value(i == j ? 1 : 0);
            sys.witness[vx(i, j)] = value;
            sys.witness[vy({i, j})] = value;
        }
}

void check_witness_satisfies_remainder(const AxiomSystem& sys) {
    for (const Axiom& ax : sys.axioms) {
        if (ax.hard) continue;
        if (ax.poly.eval(sys.witness, Rat(1)) != 0)
            throw VerificationFailed("witness violates axiom " + ax.name);
    }
}

std::string entry_name(const std::string& stem, int i, int j) {
    return stem + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

} // namespace

bool verify_certificate(IPSCertificate& cert, const AxiomSystem& sys) {
    const SystemView view = validate_system(sys);
    for (const VarId& v : cert.c.variables())
        if (!view.ground.count(v) && !view.placeholders.count(v))
            throw VariableMismatch("certificate variable " + v.str() +
                                   " is neither a ground variable nor a "
                                   "placeholder of the system");

    std::map<VarId, Poly> zeros;
    std::map<VarId, Poly> axioms;
    for (const Axiom& ax : sys.axioms) {
        zeros.emplace(ax.placeholder, Poly());
        axioms.emplace(ax.placeholder, ax.poly);
    }
    const bool ok = cert.c.substitute(zeros).is_zero() &&
                    cert.c.substitute(axioms) == Poly(1);
    cert.verified = ok;
    return ok;
}

AxiomSystem build_rank_instance(int n, int r, const RankCondenser& c,
                                bool include_boolean) {
    if (n < 1) throw InputError("matrix order must be positive");
    if (r < 1 || r > n) throw InputError("rank bound must lie in 1..n");

    AxiomSystem sys;
    sys.det_width = r;

    const std::vector<Poly> hard = rank_lt_equations(n, r, c);
    for (std::size_t e = 0; e < hard.size(); ++e)
        sys.axioms.push_back(Axiom{"rank[" + std::to_string(e + 1) + "]",
                                   hard[e],
                                   vz({static_cast<int>(e) + 1}), true});

    const std::vector<Poly> inv = inversion_entries(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            sys.axioms.push_back(
                Axiom{entry_name("inverse", i, j),
                      inv[static_cast<std::size_t>((i - 1) * n + (j - 1))],
                      VarId(Family::w, {i, j}), false});

    if (include_boolean) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Poly xv = Poly::var(vx(i, j));
                const Poly yv = Poly::var(vy({i, j}));
                sys.axioms.push_back(Axiom{entry_name("boole-x", i, j),
                                           xv * xv - xv,
                                           VarId(Family::u, {i, j}), false});
                sys.axioms.push_back(Axiom{entry_name("boole-y", i, j),
                                           yv * yv - yv,
                                           VarId(Family::v, {i, j}), false});
            }
    }

    record_identity_witness(sys, n);
    check_witness_satisfies_remainder(sys);
    return sys;
}

AxiomSystem det_inversion_system(int n) {
    if (n < 1) throw InputError("matrix order must be positive");

    AxiomSystem sys;
    sys.det_width = n;
    sys.axioms.push_back(Axiom{"det", ring_det(var_matrix(Family::x, n)),
                               VarId(Family::w, {}), true});

    const std::vector<Poly> inv = inversion_entries(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            sys.axioms.push_back(
                Axiom{entry_name("inverse", i, j),
                      inv[static_cast<std::size_t>((i - 1) * n + (j - 1))],
                      vz({i, j}), false});

    record_identity_witness(sys, n);
    check_witness_satisfies_remainder(sys);
    return sys;
}

IPSCertificate det_inversion_refutation(int n) {
    if (n < 1) throw InputError("matrix order must be positive");

    PolyMatrix z_plus_i = var_matrix(Family::z, n);
    for (int i = 0; i < n; ++i)
        z_plus_i[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
            Poly(1);

    IPSCertificate cert;
    cert.c = Poly(1) - ring_det(z_plus_i) +
             Poly::var(VarId(Family::w, {})) *
                 ring_det(var_matrix(Family::y, n));

    AxiomSystem sys = det_inversion_system(n);
    if (!verify_certificate(cert, sys))
        throw VerificationFailed("inversion refutation failed its checks");
    return cert;
}

Poly extract_ideal_element(const IPSCertificate& cert, const AxiomSystem& sys) {
    IPSCertificate check = cert;
    if (!verify_certificate(check, sys))
        throw CertificateInvalid("certificate does not refute the system");

    if (sys.witness.empty())
        throw NoWitness("system has no recorded witness");
    for (const Axiom& ax : sys.axioms) {
        if (ax.hard) continue;
        if (ax.poly.eval(sys.witness, Rat(1)) != 0)
            throw NoWitness("recorded witness does not satisfy axiom " +
                            ax.name);
    }

    std::map<VarId, Poly> images;
    for (const Axiom& ax : sys.axioms)
        images.emplace(ax.placeholder, ax.hard ? Poly() : ax.poly);
    const Poly h = Poly(1) - cert.c.substitute(images);

    if (h.is_zero())
        throw VerificationFailed("extracted element is the zero polynomial");
    if (h.eval(sys.witness, Rat(1)) != 1)
        throw VerificationFailed(
            "extracted element does not evaluate to 1 at the witness");

    if (sys.det_width > 0) {
        // View h over the n x 2n arrangement [X Y]: y[i,j] becomes the
        // column-(n+j) entry of row i.
        int n = 0;
        for (const VarId& v : h.variables())
            if ((v.fam == Family::x || v.fam == Family::y) && v.idx.size() == 2)
                n = std::max(n, std::max(v.idx[0], v.idx[1]));
        std::map<VarId, Poly> widen;
        for (const VarId& v : h.variables())
            if (v.fam == Family::y && v.idx.size() == 2)
                widen.emplace(v, Poly::var(vx(v.idx[0], n + v.idx[1])));
        const Poly arranged = widen.empty() ? h : h.substitute(widen);
        if (!is_in_det_ideal(arranged, sys.det_width))
            throw VerificationFailed(
                "extracted element escapes the width-" +
                std::to_string(sys.det_width) + " determinantal ideal");
    }
    return h;
}

} // namespace detlab
