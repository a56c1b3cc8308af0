/*
 * Deterministic seeded RNG (splitmix64).
 *
 * Every random choice in the project flows through this generator so that
 * a fixed seed reproduces byte-identical outputs on any platform. The
 * standard <random> distributions are avoided on purpose: their outputs
 * are implementation-defined.
 */
#ifndef DETLAB_RNG_HPP
#define DETLAB_RNG_HPP

#include <cstdint>

#include "detlab/rational.hpp"

namespace detlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on {lo, ..., hi}; modulo bias is irrelevant at the ranges used.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    Rat rat(std::int64_t lo, std::int64_t hi) { return Rat(uniform(lo, hi)); }

    // Nonzero integer-valued rational in [lo, hi].
    Rat nonzero_rat(std::int64_t lo, std::int64_t hi) {
        for (;;) {
            Rat r = rat(lo, hi);
            if (r != 0) return r;
        }
    }

    // Independent child stream, reproducible from (seed, salt).
    Rng fork(std::uint64_t salt) {
        Rng child(state_ ^ (salt * 0xd6e8feb86659fd93ULL + 0xa5a5a5a5a5a5a5a5ULL));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace detlab

#endif
