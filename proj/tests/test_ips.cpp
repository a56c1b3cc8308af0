#include "doctest.h"

#include "detlab/errors.hpp"
#include "detlab/ips.hpp"
#include "detlab/linalg.hpp"
#include "support/fixtures.hpp"

using namespace detlab;
using detlab::testing::X;

namespace {

Poly det_of_family(Family fam, int n) {
    PolyMatrix m(static_cast<std::size_t>(n),
                 std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Poly::var(VarId(fam, {i, j}));
    return ring_det(m);
}

} // namespace

TEST_CASE("inversion system layout") {
    const AxiomSystem sys = det_inversion_system(2);
    REQUIRE(sys.axioms.size() == 5);
    CHECK(sys.axioms[0].name == "det");
    CHECK(sys.axioms[0].hard);
    CHECK(sys.axioms[0].poly == testing::det_n(2));
    CHECK(sys.axioms[0].placeholder == VarId(Family::w, {}));
    for (std::size_t i = 1; i < sys.axioms.size(); ++i) {
        CHECK_FALSE(sys.axioms[i].hard);
        CHECK(sys.axioms[i].placeholder.fam == Family::z);
    }
    CHECK(sys.det_width == 2);
    CHECK(sys.witness.size() == 8);
    CHECK(sys.witness.at(vx(1, 1)) == Rat(1));
    CHECK(sys.witness.at(vx(1, 2)) == Rat(0));
}

TEST_CASE("inversion refutations verify at several orders") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        const IPSCertificate cert = det_inversion_refutation(n);
        CHECK(cert.verified);

        IPSCertificate again{cert.c, false};
        AxiomSystem sys = det_inversion_system(n);
        CHECK(verify_certificate(again, sys));
        CHECK(again.verified);
    }
}

TEST_CASE("certificate verification is a real gate") {
    AxiomSystem sys = det_inversion_system(2);

    SUBCASE("a constant offset breaks the zero substitution") {
        IPSCertificate cert = det_inversion_refutation(2);
        cert.c += Poly(1);
        CHECK_FALSE(verify_certificate(cert, sys));
        CHECK_FALSE(cert.verified);
    }

    SUBCASE("scaling breaks the unit substitution") {
        IPSCertificate cert = det_inversion_refutation(2);
        cert.c = cert.c.scaled(Rat(2));
        CHECK_FALSE(verify_certificate(cert, sys));
    }

    SUBCASE("foreign variables are rejected") {
        IPSCertificate cert;
        cert.c = Poly::var(VarId(Family::aux, {1}));
        CHECK_THROWS_AS(verify_certificate(cert, sys), VariableMismatch);
    }

    SUBCASE("duplicate placeholders are rejected") {
        AxiomSystem bad;
        bad.axioms.push_back(Axiom{"a", X(1, 1), VarId(Family::w, {}), true});
        bad.axioms.push_back(Axiom{"b", X(2, 2), VarId(Family::w, {}), false});
        IPSCertificate cert;
        cert.c = Poly(1);
        CHECK_THROWS_AS(verify_certificate(cert, bad), VariableMismatch);
    }

    SUBCASE("placeholders may not appear inside axioms") {
        AxiomSystem bad;
        bad.axioms.push_back(Axiom{"a", X(1, 1), VarId(Family::w, {}), true});
        bad.axioms.push_back(
            Axiom{"b", Poly::var(VarId(Family::w, {})), vz({1}), false});
        IPSCertificate cert;
        cert.c = Poly(1);
        CHECK_THROWS_AS(verify_certificate(cert, bad), VariableMismatch);
    }
}

TEST_CASE("extraction produces a certified ideal element") {
    SUBCASE("the inversion refutation extracts det(X) det(Y)") {
        for (int n = 1; n <= 2; ++n) {
            CAPTURE(n);
            const AxiomSystem sys = det_inversion_system(n);
            const IPSCertificate cert = det_inversion_refutation(n);
            const Poly h = extract_ideal_element(cert, sys);
            CHECK(h == det_of_family(Family::x, n) * det_of_family(Family::y, n));
            CHECK(h.eval(sys.witness, Rat(1)) == Rat(1));
        }
    }

    SUBCASE("an invalid certificate cannot be lifted") {
        const AxiomSystem sys = det_inversion_system(2);
        IPSCertificate cert = det_inversion_refutation(2);
        cert.c += Poly(1);
        CHECK_THROWS_AS(extract_ideal_element(cert, sys), CertificateInvalid);
    }

    SUBCASE("a missing or wrong witness is fatal") {
        AxiomSystem sys = det_inversion_system(2);
        const IPSCertificate cert = det_inversion_refutation(2);

        AxiomSystem no_witness = sys;
        no_witness.witness.clear();
        CHECK_THROWS_AS(extract_ideal_element(cert, no_witness), NoWitness);

        AxiomSystem bad_witness = sys;
        for (auto& [v, value] : bad_witness.witness) value = Rat(0);
        CHECK_THROWS_AS(extract_ideal_element(cert, bad_witness), NoWitness);
    }
}

TEST_CASE("rank instance assembles hard and satisfiable layers") {
    const RankCondenser c = fs_condenser(2, 1, Rat(2), {Rat(1), Rat(2), Rat(3)});

    SUBCASE("without boolean axioms") {
        const AxiomSystem sys = build_rank_instance(2, 1, c, false);
        REQUIRE(sys.axioms.size() == 7);  // 3 rank + 4 inverse
        int hard = 0;
        for (const Axiom& ax : sys.axioms)
            if (ax.hard) {
                ++hard;
                CHECK(ax.placeholder.fam == Family::z);
            }
        CHECK(hard == 3);
        CHECK(sys.det_width == 1);
        // The identity witness kills every non-hard axiom but no hard one.
        for (const Axiom& ax : sys.axioms) {
            const Rat v = ax.poly.eval(sys.witness, Rat(1));
            if (ax.hard)
                CHECK(v != Rat(0));
            else
                CHECK(v == Rat(0));
        }
    }

    SUBCASE("boolean axioms double up per matrix entry") {
        const AxiomSystem sys = build_rank_instance(2, 1, c, true);
        CHECK(sys.axioms.size() == 15);  // 3 rank + 4 inverse + 2*4 boolean
        int u = 0, v = 0;
        for (const Axiom& ax : sys.axioms) {
            if (ax.placeholder.fam == Family::u) ++u;
            if (ax.placeholder.fam == Family::v) ++v;
        }
        CHECK(u == 4);
        CHECK(v == 4);
    }

    SUBCASE("a too-small condenser propagates") {
        const RankCondenser tiny = fs_condenser(2, 1, Rat(2), {Rat(1)});
        CHECK_THROWS_AS(build_rank_instance(2, 1, tiny, false), CondenserTooSmall);
    }
}
