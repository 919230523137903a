#pragma once

#include <cstdint>

namespace specsupp {

// Deterministic splitmix64 stream. All randomized routines take a Rng (or a
// seed) explicitly so results are reproducible and thread-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Derive an independent child stream; used to keep sub-computations
    // deterministic regardless of evaluation order.
    Rng fork(std::uint64_t salt) {
        return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    }

private:
    std::uint64_t state_;
};

}  // namespace specsupp
