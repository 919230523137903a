#pragma once

#include "specsupp/support.hpp"

namespace specsupp::ziegler {

using algmod::Module;
using algmod::ModuleCategory;

struct EnumerationResult {
    std::vector<Module> indecomposables;  // pairwise non-isomorphic, dim ascending
    std::uint64_t structures_scanned = 0;
    std::uint64_t iso_classes_seen = 0;
    int dmax = 0;
    // Heuristic stabilization window: no indecomposable has dimension in
    // (dmax/2, dmax].
    bool finiteness_certificate = false;
};

// Enumerates all modules of dimension <= dmax (as quiver representations
// satisfying the relations, deduplicated up to isomorphism; this realizes the
// quotients of the free modules Lambda^k up to k = dmax), decomposes them and
// returns the deduplicated indecomposable summands. Finite fields only.
EnumerationResult enumerate_indecomposables(const ModuleCategory& cat, int dmax,
                                            std::uint64_t budget, std::uint64_t seed);

struct ZieglerSpectrum {
    std::vector<Module> points;
    bool discrete = true;
    bool finiteness_certificate = false;
    int dmax = 0;
};

// The spectrum at (heuristically certified) finite representation type; the
// result is returned even without the certificate, flagged.
ZieglerSpectrum ziegler_spectrum(const ModuleCategory& cat, int dmax, std::uint64_t budget,
                                 std::uint64_t seed);

struct CorrespondenceReport {
    int spectrum_size = 0;
    std::uint64_t subsets_checked = 0;
    std::uint64_t closure_tests = 0;
    bool all_subsets_closed = true;
    std::string counterexample;
    // Locality certificates: End/J is a division ring for every point.
    bool all_points_local = true;
};

// For every subset D of the spectrum, verifies on a bounded corpus that the
// additive closure of D is closed under direct sums and direct summands
// (finite products coincide with sums here), so each subset is a definable
// class; 2^n classes in total.
CorrespondenceReport definable_correspondence_check(const ModuleCategory& cat,
                                                    const ZieglerSpectrum& spectrum,
                                                    std::uint64_t seed);

}  // namespace specsupp::ziegler
