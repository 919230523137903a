#pragma once

#include "specsupp/boolring.hpp"
#include "specsupp/matalg.hpp"
#include "specsupp/module.hpp"

namespace specsupp::algmod {

// Multiplicity function Sp A -> N: the image of a module in the (discrete)
// spectral category, recorded as multiplicities of indecomposable injectives.
struct SpectralObject {
    AlgebraPtr algebra;
    std::vector<int> multiplicities;  // indexed by vertex / injective index

    bool is_zero() const;
    std::uint64_t support_mask() const;
    SpectralObject plus(const SpectralObject& o) const;
    bool operator==(const SpectralObject& o) const;
};

// Restriction of the multiplicity map to the indices in `mask` (t_U).
SpectralObject torsion_part(const SpectralObject& s, std::uint64_t mask);

enum class ResolutionStatus { complete, periodic, truncated };

struct InjResolution {
    std::vector<SpectralObject> terms;  // spectral images of I^0, I^1, ...
    ResolutionStatus status = ResolutionStatus::complete;
    int preperiod = 0;  // periodic: Z^{preperiod} is isomorphic to Z^{preperiod+period}
    int period = 0;
    int bound = 0;  // truncated: the max_terms that was reached

    bool complete_or_periodic() const { return status != ResolutionStatus::truncated; }
    std::uint64_t support_union_mask() const;
};

// Per-algebra context: the structure modules (simples, projectives,
// injectives via duals of opposite projectives) plus the operations that
// need them.
class ModuleCategory {
public:
    explicit ModuleCategory(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const AlgebraPtr& opposite_algebra() const { return op_; }
    int points() const { return alg_->num_vertices(); }  // |Sp A|
    const Field& field() const { return alg_->field(); }

    const Module& simple(int i) const { return simples_[i]; }
    const Module& projective(int i) const { return projectives_[i]; }
    const Module& injective(int i) const { return injectives_[i]; }
    const Module& regular() const { return regular_; }
    Module zero_module() const { return Module::zero(alg_); }

    std::string simple_label(int i) const { return "S" + alg_->quiver().vertices[i]; }
    std::string injective_label(int i) const { return "I" + alg_->quiver().vertices[i]; }
    int injective_index_by_label(const std::string& label) const;

    // Socle row of injective(i): the canonical copy of S_i inside I_i.
    const Matrix& injective_socle_row(int i) const { return injective_socle_rows_[i]; }

    SpectralObject spectral_image(const Module& m) const;

    struct Envelope {
        Module envelope;
        ModuleMap iota;
        SpectralObject image;
    };
    Envelope injective_envelope(const Module& m) const;
    bool is_injective(const Module& m, std::uint64_t seed = 0) const;
    bool is_essential_mono(const ModuleMap& f) const;

    InjResolution min_inj_resolution(const Module& m, int max_terms) const;

    struct Decomposition {
        std::vector<Module> summands;       // primitive pieces, in order
        std::vector<Matrix> summand_rows;   // their row spaces inside m
        std::vector<int> class_of;          // iso class index per summand
        std::vector<Module> class_reps;
        std::vector<int> class_multiplicity;
        Matrix change_of_basis;  // stacked summand rows; invertible witness
    };
    Decomposition decompose(const Module& m, std::uint64_t seed) const;

    struct EndoLattice {
        boolring::RingPtr lattice;  // one atom per central block of End/J
        int block_count = 0;
        std::vector<Matrix> block_idempotents;      // lifted, in End(m)
        std::vector<Matrix> primitive_idempotents;  // lifted primitive system
        std::vector<int> block_of;
        int endo_dim = 0;
        int radical_dim = 0;
    };
    EndoLattice endo_central_idempotents(const Module& m, std::uint64_t seed) const;

    // Semisimple module with the given multiplicities of simples.
    Module semisimple_module(const std::vector<int>& mults) const;
    // Direct sum of injectives with the given multiplicities.
    Module injective_sum(const std::vector<int>& mults) const;

private:
    AlgebraPtr alg_, op_;
    std::vector<Module> simples_, projectives_, injectives_;
    Module regular_;
    std::vector<Matrix> injective_socle_rows_;
};

// The semisimple algebra k^n presented as a quiver with n vertices and no
// arrows; check data for the Boolean-lattice realization.
AlgebraPtr realize_boolean_lattice(int n, Field field);

}  // namespace specsupp::algmod
