#include "specsupp/category.hpp"

#include <algorithm>

namespace specsupp::algmod {

bool SpectralObject::is_zero() const {
    for (int m : multiplicities)
        if (m) return false;
    return true;
}

std::uint64_t SpectralObject::support_mask() const {
    std::uint64_t mask = 0;
    for (size_t i = 0; i < multiplicities.size(); ++i)
        if (multiplicities[i]) mask |= 1ull << i;
    return mask;
}

SpectralObject SpectralObject::plus(const SpectralObject& o) const {
    SpectralObject out = *this;
    for (size_t i = 0; i < multiplicities.size(); ++i) out.multiplicities[i] += o.multiplicities[i];
    return out;
}

bool SpectralObject::operator==(const SpectralObject& o) const {
    return multiplicities == o.multiplicities;
}

SpectralObject torsion_part(const SpectralObject& s, std::uint64_t mask) {
    SpectralObject out = s;
    for (size_t i = 0; i < out.multiplicities.size(); ++i)
        if (!(mask & (1ull << i))) out.multiplicities[i] = 0;
    return out;
}

std::uint64_t InjResolution::support_union_mask() const {
    std::uint64_t mask = 0;
    for (const auto& t : terms) mask |= t.support_mask();
    return mask;
}

ModuleCategory::ModuleCategory(AlgebraPtr alg)
    : alg_(std::move(alg)), op_(alg_->opposite()), regular_(Module::zero(alg_)) {
    Field f = alg_->field();
    int n = alg_->dim();
    int nv = alg_->num_vertices();

    // Regular module: action of b_j on coordinate rows is right multiplication.
    {
        std::vector<Matrix> action;
        for (int j = 0; j < n; ++j) {
            Matrix a(f, n, n);
            for (int i = 0; i < n; ++i) {
                const Matrix& row = alg_->mult_basis(i, j);
                for (int k = 0; k < n; ++k) a.set(i, k, row.at(0, k));
            }
            action.push_back(a);
        }
        regular_ = Module(alg_, std::move(action), "Lambda");
    }

    // Simples: one per vertex.
    for (int v = 0; v < nv; ++v) {
        std::vector<Matrix> action;
        for (int i = 0; i < n; ++i) {
            Matrix a(f, 1, 1);
            if (i == v) a.set_int(0, 0, 1);
            action.push_back(a);
        }
        simples_.emplace_back(alg_, std::move(action), simple_label(v));
    }

    // Projectives: P_v = e_v * Lambda inside the regular module.
    for (int v = 0; v < nv; ++v) {
        Matrix rows(f, 0, n);
        for (int i = 0; i < n; ++i)
            if (alg_->basis()[i].source == v) {
                Matrix unit(f, 1, n);
                unit.set_int(0, i, 1);
                rows = Matrix::vstack(rows, unit);
            }
        auto sub = submodule_from_rows(regular_, rows);
        sub.module.set_name("P" + alg_->quiver().vertices[v]);
        projectives_.push_back(sub.module);
    }

    // Injectives: duals of the opposite-side projectives.
    {
        ModuleCategory* self = this;  // avoid recursion: build op projectives inline
        (void)self;
        // op regular module
        std::vector<Matrix> opaction;
        for (int j = 0; j < n; ++j) {
            Matrix a(f, n, n);
            for (int i = 0; i < n; ++i) {
                const Matrix& row = op_->mult_basis(i, j);
                for (int k = 0; k < n; ++k) a.set(i, k, row.at(0, k));
            }
            opaction.push_back(a);
        }
        Module op_regular(op_, std::move(opaction), "Lambda_op");
        for (int v = 0; v < nv; ++v) {
            Matrix rows(f, 0, n);
            for (int i = 0; i < n; ++i)
                if (op_->basis()[i].source == v) {
                    Matrix unit(f, 1, n);
                    unit.set_int(0, i, 1);
                    rows = Matrix::vstack(rows, unit);
                }
            auto sub = submodule_from_rows(op_regular, rows);
            Module inj = dual_module(sub.module, alg_);
            inj.set_name(injective_label(v));
            inj.validate();
            injectives_.push_back(inj);
        }
    }

    // Each injective must have simple socle S_v.
    for (int v = 0; v < nv; ++v) {
        auto sr = socle_radical(injectives_[v]);
        for (int w = 0; w < nv; ++w) {
            int expect = (w == v) ? 1 : 0;
            if (sr.socle_multiplicities[w] != expect)
                throw InvalidInput("injective " + injective_label(v) + " does not have simple socle");
        }
        injective_socle_rows_.push_back(sr.socle_component_rows[v].row(0));
    }
}

int ModuleCategory::injective_index_by_label(const std::string& label) const {
    for (int i = 0; i < points(); ++i)
        if (injective_label(i) == label) return i;
    throw InvalidInput("unknown injective label '" + label + "'");
}

SpectralObject ModuleCategory::spectral_image(const Module& m) const {
    auto sr = socle_radical(m);
    return SpectralObject{alg_, sr.socle_multiplicities};
}

ModuleCategory::Envelope ModuleCategory::injective_envelope(const Module& m) const {
    Field f = field();
    auto sr = socle_radical(m);
    SpectralObject image{alg_, sr.socle_multiplicities};
    if (m.dim() == 0) {
        Module e = zero_module();
        return Envelope{e, ModuleMap{m, e, Matrix(f, 0, 0)}, image};
    }
    std::vector<Module> parts;
    for (int v = 0; v < points(); ++v)
        for (int c = 0; c < sr.socle_multiplicities[v]; ++c) parts.push_back(injectives_[v]);
    auto sum = direct_sum(parts);
    Module& env = sum.module;

    // Map the socle of m onto the socles of the copies, then extend to all
    // of m by solving the intertwiner system with those rows pinned.
    Matrix soc_stack(f, 0, m.dim());
    Matrix phi(f, 0, env.dim());
    int part = 0;
    for (int v = 0; v < points(); ++v) {
        const Matrix& comp = sr.socle_component_rows[v];
        for (int c = 0; c < sr.socle_multiplicities[v]; ++c) {
            soc_stack = Matrix::vstack(soc_stack, comp.row(c));
            Matrix target_row = injective_socle_rows_[v] * sum.inclusions[part].mat;
            phi = Matrix::vstack(phi, target_row);
            ++part;
        }
    }

    int dm = m.dim(), de = env.dim();
    int unknowns = dm * de;
    Matrix sys(f, 0, unknowns);
    Matrix rhs(f, 0, 1);
    for (const auto& g : alg_->generator_coords()) {
        Matrix s = m.action_of(g), t = env.action_of(g);
        Matrix rows(f, dm * de, unknowns);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < de; ++j) {
                int eq = i * de + j;
                for (int k = 0; k < dm; ++k) {
                    Scalar cur = rows.at(eq, k * de + j);
                    rows.set(eq, k * de + j, cur + s.at(i, k));
                }
                for (int k = 0; k < de; ++k) {
                    Scalar cur = rows.at(eq, i * de + k);
                    rows.set(eq, i * de + k, cur - t.at(k, j));
                }
            }
        sys = Matrix::vstack(sys, rows);
        rhs = Matrix::vstack(rhs, Matrix(f, dm * de, 1));
    }
    for (int r = 0; r < soc_stack.rows(); ++r) {
        Matrix rows(f, de, unknowns);
        Matrix vals(f, de, 1);
        for (int j = 0; j < de; ++j) {
            for (int k = 0; k < dm; ++k) rows.set(j, k * de + j, soc_stack.at(r, k));
            vals.set(j, 0, phi.at(r, j));
        }
        sys = Matrix::vstack(sys, rows);
        rhs = Matrix::vstack(rhs, vals);
    }
    auto sol = sys.solve(rhs);
    if (!sol) throw ExtensionFailure("socle embedding does not extend to the module");
    Matrix fmat(f, dm, de);
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < de; ++j) fmat.set(i, j, sol->at(i * de + j, 0));
    ModuleMap iota{m, env, fmat};
    if (fmat.rank() != dm) throw ExtensionFailure("extension of the socle embedding is not injective");
    return Envelope{env, iota, image};
}

bool ModuleCategory::is_injective(const Module& m, std::uint64_t seed) const {
    if (m.dim() == 0) return true;
    auto env = injective_envelope(m);
    return env.envelope.dim() == m.dim() && is_isomorphic(m, env.envelope, seed);
}

bool ModuleCategory::is_essential_mono(const ModuleMap& f) const {
    if (!f.is_mono()) throw NotMono("map has a nonzero kernel");
    auto sr = socle_radical(f.target);
    exactla::RowSpan image(f.mat);
    for (int r = 0; r < sr.socle_rows.rows(); ++r)
        if (!image.contains_row(sr.socle_rows.row(r))) return false;
    return true;
}

InjResolution ModuleCategory::min_inj_resolution(const Module& m, int max_terms) const {
    if (max_terms < 1) throw InvalidInput("max_terms must be >= 1");
    InjResolution res;
    std::vector<Module> syzygies;
    Module z = m;
    for (int n = 0; n < max_terms; ++n) {
        if (z.dim() == 0) {
            res.status = ResolutionStatus::complete;
            return res;
        }
        for (size_t k = 0; k < syzygies.size(); ++k) {
            if (syzygies[k].dim() == z.dim() && is_isomorphic(syzygies[k], z, 7)) {
                res.status = ResolutionStatus::periodic;
                res.preperiod = static_cast<int>(k);
                res.period = static_cast<int>(syzygies.size() - k);
                return res;
            }
        }
        syzygies.push_back(z);
        auto env = injective_envelope(z);
        res.terms.push_back(env.image);
        auto quot = quotient_by_rows(env.envelope, env.iota.mat.row_space_basis());
        z = quot.module;
    }
    res.status = ResolutionStatus::truncated;
    res.bound = max_terms;
    return res;
}

ModuleCategory::Decomposition ModuleCategory::decompose(const Module& m, std::uint64_t seed) const {
    Decomposition out{{}, {}, {}, {}, {}, Matrix(field(), 0, m.dim())};
    if (m.dim() == 0) return out;
    auto ends = end_basis(m);
    auto algebra = exactla::MatrixAlgebra::from_basis(ends);
    auto split = exactla::split_idempotents(algebra, seed);
    Matrix stacked(field(), 0, m.dim());
    for (const auto& e : split.primitive_system) {
        Matrix rows = e.row_space_basis();
        auto sub = submodule_from_rows(m, rows);
        out.summands.push_back(sub.module);
        out.summand_rows.push_back(rows);
        stacked = Matrix::vstack(stacked, rows);
    }
    if (stacked.rank() != m.dim())
        throw InvalidInput("idempotent images do not decompose the module");
    out.change_of_basis = stacked;
    for (size_t i = 0; i < out.summands.size(); ++i) {
        int found = -1;
        for (size_t c = 0; c < out.class_reps.size(); ++c)
            if (is_isomorphic(out.class_reps[c], out.summands[i], seed ^ (0x9e37 + i))) {
                found = static_cast<int>(c);
                break;
            }
        if (found < 0) {
            out.class_reps.push_back(out.summands[i]);
            out.class_multiplicity.push_back(0);
            found = static_cast<int>(out.class_reps.size()) - 1;
        }
        out.class_of.push_back(found);
        out.class_multiplicity[found] += 1;
    }
    return out;
}

ModuleCategory::EndoLattice ModuleCategory::endo_central_idempotents(const Module& m,
                                                                     std::uint64_t seed) const {
    EndoLattice out;
    if (m.dim() == 0) {
        out.lattice = std::make_shared<boolring::BoolRing>(std::vector<std::string>{});
        return out;
    }
    auto ends = end_basis(m);
    auto algebra = exactla::MatrixAlgebra::from_basis(ends);
    auto split = exactla::split_idempotents(algebra, seed);
    out.block_count = static_cast<int>(split.central_primitives.size());
    out.block_idempotents = split.central_primitives;
    out.primitive_idempotents = split.primitive_system;
    out.block_of = split.block_of;
    out.endo_dim = algebra.dim();
    out.radical_dim = static_cast<int>(split.radical.size());
    std::vector<std::string> labels;
    for (int b = 0; b < out.block_count; ++b) labels.push_back("z" + std::to_string(b));
    out.lattice = std::make_shared<boolring::BoolRing>(labels);
    return out;
}

Module ModuleCategory::semisimple_module(const std::vector<int>& mults) const {
    std::vector<Module> parts;
    for (int v = 0; v < points(); ++v)
        for (int c = 0; c < mults[v]; ++c) parts.push_back(simples_[v]);
    if (parts.empty()) return zero_module();
    return direct_sum(parts).module;
}

Module ModuleCategory::injective_sum(const std::vector<int>& mults) const {
    std::vector<Module> parts;
    for (int v = 0; v < points(); ++v)
        for (int c = 0; c < mults[v]; ++c) parts.push_back(injectives_[v]);
    if (parts.empty()) return zero_module();
    return direct_sum(parts).module;
}

AlgebraPtr realize_boolean_lattice(int n, Field field) {
    if (n < 1) throw InvalidInput("realize_boolean_lattice needs n >= 1");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    return Algebra::from_quiver(q, {}, field, 1);
}

}  // namespace specsupp::algmod
