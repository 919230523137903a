#pragma once

#include <map>

#include "specsupp/category.hpp"

namespace specsupp::support {

using algmod::AlgebraPtr;
using algmod::InjResolution;
using algmod::Module;
using algmod::ModuleCategory;
using exactla::Matrix;

// Subset of Sp A, i.e. an element of S(A) = Clop(Spc A) in the discrete
// model; inherits Boolean-ring semantics with atoms = Sp A.
struct SupportSet {
    AlgebraPtr algebra;
    std::uint64_t mask = 0;

    bool operator==(const SupportSet& o) const { return mask == o.mask; }
    bool subset_of(const SupportSet& o) const { return (mask & ~o.mask) == 0; }
    bool empty() const { return mask == 0; }
    std::vector<std::string> labels(const ModuleCategory& cat) const;
};

SupportSet support_union(const SupportSet& a, const SupportSet& b);
SupportSet support_intersect(const SupportSet& a, const SupportSet& b);
SupportSet support_complement(const ModuleCategory& cat, const SupportSet& a);
SupportSet full_support(const ModuleCategory& cat);
SupportSet support_from_labels(const ModuleCategory& cat, const std::vector<std::string>& labels);

SupportSet supp(const ModuleCategory& cat, const Module& m);

struct SuppEx {
    SupportSet set;
    bool complete = false;
    InjResolution resolution;
};
SuppEx supp_ex(const ModuleCategory& cat, const Module& m, int max_terms);

// supp of the explicit direct sum; checked equal to the join of the parts.
SupportSet supp_join_family(const ModuleCategory& cat, const std::vector<Module>& modules);

enum class SubcatKind { essentially_closed, cohomologically_stable, stable_localising_candidate };

struct ClassifiedSubcategory {
    SubcatKind kind = SubcatKind::essentially_closed;
    SupportSet data;
};

// Membership per the kind's criterion (supp for essentially closed, supp_ex
// for cohomologically stable, both for stable-localising candidates).
// Throws IncompleteResolution when supp_ex is truncated.
bool class_membership(const ModuleCategory& cat, const Module& m, const ClassifiedSubcategory& c,
                      int max_terms);

// D(X) for injective X: the Boolean lattice on atoms supp(X), with witness
// direct summands per atom subset and the End(X)/J cross-check.
struct DecompositionLattice {
    boolring::RingPtr ring;        // atoms labelled by injective labels
    std::vector<int> atom_points;  // Sp index per atom
    SupportSet support;
    // canonical witness summand (grouped isotypic pieces) per single atom
    std::vector<Module> atom_witnesses;
    std::vector<Matrix> atom_rows;  // rows of each atom witness inside X
    int endo_block_count = 0;       // number of central blocks of End(X)/J
    Module witness_for(const ModuleCategory& cat, std::uint64_t atom_mask) const;
};
DecompositionLattice decomposition_lattice(const ModuleCategory& cat, const Module& x,
                                           std::uint64_t seed);

// Summands realizing a partition of supp(X); the direct sum of the output is
// X up to an explicit change of basis.
std::vector<Module> realize_decomposition(const ModuleCategory& cat, const Module& x,
                                          const std::vector<SupportSet>& partition, std::uint64_t seed);

struct ClosureResult {
    std::vector<Module> corpus;  // iso-class representatives, zero first
    SupportSet sigma;
    bool stable = false;
    std::vector<std::string> unstable_witnesses;  // members whose envelope escapes
    std::uint64_t iterations = 0;
};
// Bounded closure of the generators under submodules, quotients, finite
// direct sums, and extensions below dim_cap. Certified only relative to
// dim_cap and the enumeration budget.
ClosureResult localising_closure(const ModuleCategory& cat, const std::vector<Module>& generators,
                                 int dim_cap, std::uint64_t budget, std::uint64_t seed);

struct ExactnessReport {
    int samples = 0;
    int sequences_checked = 0;
    int inclusions_checked = 0;
    int violations = 0;
    int split_equalities_checked = 0;
    std::string counterexample;  // empty when none
    bool ok() const { return violations == 0; }
};
// Seeded short exact sequences 0 -> N -> M -> M/N -> 0 sampled from the pool;
// verifies every two-out-of-three inclusion for supp_ex.
ExactnessReport exactness_property_check(const ModuleCategory& cat, const std::vector<Module>& pool,
                                         int trials, std::uint64_t seed, std::uint64_t budget,
                                         int max_terms);

}  // namespace specsupp::support
