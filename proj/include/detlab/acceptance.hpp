/*
 * Library-level acceptance suite.
 *
 * Thirteen numbered criteria exercise the full pipeline end to end; each
 * produces a pass flag plus a deterministic one-line detail.  The rendered
 * timing-free report is a pure function of the seed, which the final
 * criterion checks by re-running the suite and comparing bytes.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detlab/ips.hpp"

namespace detlab {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;     // deterministic; never contains wall-clock data
    double seconds = 0.0;   // informational only
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

// Runs criteria 1-12, then re-runs them with the same seed and adds the
// byte-determinism criterion comparing the two rendered reports.
AcceptanceReport run_acceptance(std::uint64_t seed);

// One line per criterion, "PASS  3 name: detail".  Timing is appended only
// when requested; the timing-free form is the byte-stable payload.
std::string render_report(const AcceptanceReport& rep, bool include_timing);

// A rank-2 axiom system over 3x3 matrices together with an explicit
// refuting certificate, assembled from the adjugate determinant identity
// det(adj X) = det(X)^2 expanded column by column so that every term of
// the combination carries exactly one equation placeholder.  Exercises
// verification and extraction on an instance whose width bound is
// strictly below the matrix order.
struct DemoRankInstance {
    AxiomSystem system;
    IPSCertificate certificate;
};

DemoRankInstance demo_rank_instance();

} // namespace detlab
