#pragma once

#include <functional>

#include "specsupp/support.hpp"

namespace specsupp::datum {

using algmod::Module;
using algmod::ModuleCategory;
using boolring::FiniteSpace;
using support::SupportSet;

using PointMask = std::uint64_t;  // subset of the datum's space

// A support datum (T, sigma) on a finite witness set, with a callback that
// extends sigma to the direct sums and injective sums the verifier builds.
// exact_flag selects supp_ex semantics for the meet axiom's witnesses.
struct SupportDatum {
    const ModuleCategory* category = nullptr;
    FiniteSpace space;
    bool exact_flag = false;
    std::vector<std::pair<Module, PointMask>> table;  // named witness modules
    std::vector<std::string> full_support_witnesses;  // names, subset of table
    std::function<std::optional<PointMask>(const Module&)> sigma_callback;

    PointMask full_mask() const {
        return space.size() >= 64 ? ~0ull : ((1ull << space.size()) - 1);
    }
    // Table lookup by name, then the callback; MissingSigma when neither
    // covers the module.
    PointMask sigma_of(const Module& m) const;
};

// sigma from a per-point tracking rule: p is in sigma(X) iff supp(X) (or
// supp_ex(X)) meets the tracked atom set of p.
SupportDatum tracking_datum(const ModuleCategory& cat, FiniteSpace space,
                            std::vector<std::uint64_t> tracked_atoms, bool exact, int max_terms);
// The canonical datum (Spc A, supp).
SupportDatum canonical_datum(const ModuleCategory& cat, bool exact, int max_terms);

struct AxiomCheck {
    std::string axiom;  // "S0", "S1", "Sv", "S^" (or E-prefixed)
    bool passed = true;
    std::string detail;
};

struct DatumReport {
    std::vector<AxiomCheck> checks;
    bool all_passed = true;
    std::vector<std::string> notes;  // includes the supp(Lambda) observation
};

DatumReport verify_datum(const SupportDatum& d, int max_terms);

struct UniversalMapResult {
    std::vector<int> point_to_atom;  // Sp index per point of T
    bool factorization_ok = false;
};

// The adjunction transpose of the induced lattice homomorphism <X> -> sigma(X);
// requires verify_datum to pass. Throws NotALatticeHom if the induced atom
// images do not form a disjoint cover.
UniversalMapResult universal_map(const SupportDatum& d, int max_terms);

struct UniversalityReport {
    std::uint64_t candidates = 0;
    std::uint64_t satisfying = 0;
    bool unique = false;
    bool matches_universal_map = false;
    bool ambiguous_witness_set = false;  // more than one factorizing map
};

// Exhaustive search over all maps T -> Spc A (requires |T| <= 4, |Sp A| <= 4).
UniversalityReport verify_universality(const SupportDatum& d, int max_terms);

}  // namespace specsupp::datum
