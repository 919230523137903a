#pragma once

#include "specsupp/algebra.hpp"
#include "specsupp/rng.hpp"

namespace specsupp::algmod {

using exactla::RowSpan;

// Right module over an Algebra: elements are coordinate rows, the action of
// basis element b is m -> m * action(b), and b -> action(b) is a unital
// algebra homomorphism (validated on construction).
class Module {
public:
    Module(AlgebraPtr alg, std::vector<Matrix> action, std::string name = "", bool validate = true);
    static Module zero(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return dim_; }
    bool is_zero_module() const { return dim_ == 0; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const Matrix& action(int basis_index) const { return action_[basis_index]; }
    const std::vector<Matrix>& actions() const { return action_; }
    Matrix action_of(const Matrix& coords) const;
    const Field& field() const { return alg_->field(); }

    int vertex_dim(int v) const { return action_[v].rank(); }
    std::vector<int> dimension_vector() const;

    void validate() const;

private:
    AlgebraPtr alg_;
    int dim_ = 0;
    std::vector<Matrix> action_;
    std::string name_;
};

struct ModuleMap {
    Module source, target;
    Matrix mat;  // source.dim() x target.dim(); applies as m -> m * mat

    bool is_intertwiner() const;
    bool is_mono() const { return mat.rank() == source.dim(); }
    bool is_epi() const { return mat.rank() == target.dim(); }
    bool is_iso() const { return source.dim() == target.dim() && is_mono(); }
};

ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g

struct SubmoduleView {
    Module module;
    ModuleMap inclusion;
    Matrix rows;  // basis rows of the subspace inside the ambient module
};

struct QuotientView {
    Module module;
    ModuleMap projection;
    Matrix section;  // (quot dim) x (ambient dim): right inverse of projection
};

// `rows` must span an action-stable subspace (checked).
SubmoduleView submodule_from_rows(const Module& m, const Matrix& rows);
QuotientView quotient_by_rows(const Module& m, const Matrix& rows);

struct DirectSum {
    Module module;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);

// Basis of the intertwiner space Hom(m, n).
std::vector<Matrix> hom_basis(const Module& m, const Module& n);
std::vector<Matrix> end_basis(const Module& m);

// Isomorphism test: searches Hom(m, n) for an invertible element
// (basis elements, then seeded random combinations, then exhaustive scan
// when the hom space is small). Deterministic given the seed.
std::optional<Matrix> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed);
bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed);

struct SocleRadical {
    Matrix socle_rows;
    Matrix radical_rows;
    std::vector<int> socle_multiplicities;  // per simple/vertex index
    std::vector<Matrix> socle_component_rows;
};
SocleRadical socle_radical(const Module& m);

// Rows of m's radical subspace m * J(Lambda).
Matrix radical_rows(const Module& m);

// The dual module over the opposite algebra (actions transposed); pass the
// cached opposite algebra so repeated duals share one instance.
Module dual_module(const Module& m, const AlgebraPtr& opposite);

// Cheap isomorphism-invariant fingerprint used to bucket candidates before
// running intertwiner searches.
std::string iso_invariant_key(const Module& m);

// All action-stable subspaces of dimension <= dim_cap, as canonical row
// bases. Complete; throws BudgetExceeded past `budget` subspaces or when a
// socle component has more lines than the budget.
std::vector<Matrix> submodules_enumerate(const Module& m, int dim_cap, std::uint64_t budget);

}  // namespace specsupp::algmod
