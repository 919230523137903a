#include "specsupp/module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace specsupp::algmod {

Module::Module(AlgebraPtr alg, std::vector<Matrix> action, std::string name, bool validate)
    : alg_(std::move(alg)), action_(std::move(action)), name_(std::move(name)) {
    if (static_cast<int>(action_.size()) != alg_->dim())
        throw InvalidInput("module needs one action matrix per algebra basis element");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& a : action_) {
        if (a.rows() != dim_ || a.cols() != dim_) throw InvalidInput("action matrices must be d x d");
        if (!(a.field() == alg_->field())) throw FieldMismatch("module action field");
    }
    if (validate) this->validate();
}

Module Module::zero(AlgebraPtr alg) {
    std::vector<Matrix> action(alg->dim(), Matrix(alg->field(), 0, 0));
    return Module(std::move(alg), std::move(action), "0", false);
}

void Module::validate() const {
    if (dim_ == 0) return;
    int n = alg_->dim();
    // action respects structure constants and the unit
    Matrix unit = Matrix::zero(field(), dim_, dim_);
    Matrix unit_coords = alg_->unit_coords();
    for (int v = 0; v < n; ++v)
        if (!unit_coords.at(0, v).is_zero()) unit = unit + action_[v].scaled(unit_coords.at(0, v));
    if (unit != Matrix::identity(field(), dim_)) throw InvalidInput("module: unit does not act as identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix expect = Matrix::zero(field(), dim_, dim_);
            const Matrix& prod = alg_->mult_basis(i, j);
            for (int k = 0; k < n; ++k) {
                Scalar c = prod.at(0, k);
                if (!c.is_zero()) expect = expect + action_[k].scaled(c);
            }
            if (action_[i] * action_[j] != expect)
                throw InvalidInput("module action violates structure constants at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
        }
}

Matrix Module::action_of(const Matrix& coords) const {
    Matrix out = Matrix::zero(field(), dim_, dim_);
    for (int i = 0; i < alg_->dim(); ++i) {
        Scalar c = coords.at(0, i);
        if (!c.is_zero()) out = out + action_[i].scaled(c);
    }
    return out;
}

std::vector<int> Module::dimension_vector() const {
    std::vector<int> dv;
    for (int v = 0; v < alg_->num_vertices(); ++v) dv.push_back(vertex_dim(v));
    return dv;
}

bool ModuleMap::is_intertwiner() const {
    for (const auto& g : source.algebra()->generator_coords())
        if (source.action_of(g) * mat != mat * target.action_of(g)) return false;
    return true;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    return ModuleMap{f.source, g.target, f.mat * g.mat};
}

SubmoduleView submodule_from_rows(const Module& m, const Matrix& rows) {
    Field f = m.field();
    Matrix basis = rows.row_space_basis();
    int k = basis.rows();
    if (k == 0) {
        Module sub = Module::zero(m.algebra());
        return SubmoduleView{sub, ModuleMap{sub, m, Matrix(f, 0, m.dim())}, basis};
    }
    auto [t, tinv] = exactla::complete_to_basis(basis, m.dim());
    std::vector<Matrix> action;
    RowSpan span(basis);
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        Matrix moved = basis * m.action(i);
        for (int r = 0; r < moved.rows(); ++r)
            if (!span.contains_row(moved.row(r))) throw InvalidInput("rows do not span a submodule");
        Matrix conj = t * m.action(i) * tinv;
        std::vector<int> idx(k);
        for (int r = 0; r < k; ++r) idx[r] = r;
        action.push_back(conj.select_rows(idx).select_cols(idx));
    }
    Module sub(m.algebra(), std::move(action), "", false);
    return SubmoduleView{sub, ModuleMap{sub, m, basis}, basis};
}

QuotientView quotient_by_rows(const Module& m, const Matrix& rows) {
    Field f = m.field();
    Matrix basis = rows.row_space_basis();
    int k = basis.rows();
    int q = m.dim() - k;
    if (k == 0) {
        Module quot = m;
        return QuotientView{quot, ModuleMap{m, quot, Matrix::identity(f, m.dim())},
                            Matrix::identity(f, m.dim())};
    }
    auto [t, tinv] = exactla::complete_to_basis(basis, m.dim());
    RowSpan span(basis);
    std::vector<int> tail(q);
    for (int r = 0; r < q; ++r) tail[r] = k + r;
    std::vector<Matrix> action;
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        Matrix moved = basis * m.action(i);
        for (int r = 0; r < moved.rows(); ++r)
            if (!span.contains_row(moved.row(r))) throw InvalidInput("rows do not span a submodule");
        Matrix conj = t * m.action(i) * tinv;
        action.push_back(conj.select_rows(tail).select_cols(tail));
    }
    Module quot(m.algebra(), std::move(action), "", false);
    // projection: x -> coords of x in t-basis, last q coordinates
    Matrix proj = tinv.select_cols(tail);
    Matrix section = t.select_rows(tail);
    return QuotientView{quot, ModuleMap{m, quot, proj}, section};
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw InvalidInput("direct_sum of empty list needs an algebra");
    AlgebraPtr alg = parts[0].algebra();
    Field f = parts[0].field();
    int total = 0;
    for (const auto& p : parts) {
        if (!p.algebra()->same_presentation(*alg)) throw InvalidInput("direct sum across algebras");
        total += p.dim();
    }
    std::vector<Matrix> action;
    for (int i = 0; i < alg->dim(); ++i) {
        Matrix block(f, 0, 0);
        for (const auto& p : parts) block = Matrix::block_diag(block, p.action(i));
        action.push_back(block);
    }
    Module sum(alg, std::move(action), "", false);
    DirectSum out{sum, {}, {}};
    int offset = 0;
    for (const auto& p : parts) {
        Matrix inc(f, p.dim(), total), prj(f, total, p.dim());
        for (int r = 0; r < p.dim(); ++r) {
            inc.set_int(r, offset + r, 1);
            prj.set_int(offset + r, r, 1);
        }
        out.inclusions.push_back(ModuleMap{p, sum, inc});
        out.projections.push_back(ModuleMap{sum, p, prj});
        offset += p.dim();
    }
    return out;
}

std::vector<Matrix> hom_basis(const Module& m, const Module& n) {
    Field f = m.field();
    int dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    const auto& gens = m.algebra()->generator_coords();
    // Unknown F (dm x dn), equations S*F - F*T = 0 per generator.
    int unknowns = dm * dn;
    Matrix sys(f, 0, unknowns);
    for (const auto& g : gens) {
        Matrix s = m.action_of(g), t = n.action_of(g);
        Matrix rows(f, dm * dn, unknowns);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) {
                int eq = i * dn + j;
                for (int k = 0; k < dm; ++k) {
                    Scalar cur = rows.at(eq, k * dn + j);
                    rows.set(eq, k * dn + j, cur + s.at(i, k));
                }
                for (int k = 0; k < dn; ++k) {
                    Scalar cur = rows.at(eq, i * dn + k);
                    rows.set(eq, i * dn + k, cur - t.at(k, j));
                }
            }
        sys = Matrix::vstack(sys, rows);
    }
    Matrix kernel = sys.right_kernel();  // unknowns x h
    std::vector<Matrix> out;
    for (int c = 0; c < kernel.cols(); ++c) {
        Matrix h(f, dm, dn);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) h.set(i, j, kernel.at(i * dn + j, c));
        out.push_back(h);
    }
    return out;
}

std::vector<Matrix> end_basis(const Module& m) { return hom_basis(m, m); }

std::optional<Matrix> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(m.field(), 0, 0);
    if (m.dimension_vector() != n.dimension_vector()) return std::nullopt;
    Field f = m.field();
    auto homs = hom_basis(m, n);
    if (homs.empty()) return std::nullopt;
    int h = static_cast<int>(homs.size());
    auto invertible = [&](const Matrix& cand) { return cand.rank() == m.dim(); };
    for (const auto& b : homs)
        if (invertible(b)) return b;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            Matrix s = homs[i] + homs[j];
            if (invertible(s)) return s;
        }
    Rng rng(seed);
    int trials = f.is_rational() ? 40 : 100;
    for (int t = 0; t < trials; ++t) {
        Matrix cand = Matrix::zero(f, m.dim(), n.dim());
        for (const auto& b : homs) {
            Scalar c = f.is_rational() ? Scalar::from_int(f, static_cast<long long>(rng.below(19)) - 9)
                                       : Scalar(f, rng.below(f.p));
            cand = cand + b.scaled(c);
        }
        if (invertible(cand)) return cand;
    }
    // Exhaustive fallback over small hom spaces.
    if (!f.is_rational()) {
        double size = 1;
        for (int i = 0; i < h; ++i) {
            size *= f.p;
            if (size > (1 << 20)) break;
        }
        if (size <= (1 << 20)) {
            std::vector<std::uint64_t> digits(h, 0);
            for (;;) {
                int pos = 0;
                while (pos < h) {
                    if (++digits[pos] < f.p) break;
                    digits[pos++] = 0;
                }
                if (pos == h) break;
                Matrix cand = Matrix::zero(f, m.dim(), n.dim());
                for (int i = 0; i < h; ++i)
                    if (digits[i]) cand = cand + homs[i].scaled(Scalar(f, digits[i]));
                if (invertible(cand)) return cand;
            }
        }
    }
    return std::nullopt;
}

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
    return find_isomorphism(m, n, seed).has_value();
}

Matrix radical_rows(const Module& m) {
    Field f = m.field();
    Matrix stack(f, 0, m.dim());
    for (int i : m.algebra()->radical_indices()) stack = Matrix::vstack(stack, m.action(i));
    return stack.row_space_basis();
}

SocleRadical socle_radical(const Module& m) {
    Field f = m.field();
    SocleRadical out{Matrix(f, 0, m.dim()), Matrix(f, 0, m.dim()), {}, {}};
    out.radical_rows = radical_rows(m);
    Matrix stacked(f, m.dim(), 0);
    for (int i : m.algebra()->radical_indices()) stacked = Matrix::hstack(stacked, m.action(i));
    Matrix soc = m.dim() == 0 ? Matrix(f, 0, 0)
                              : (stacked.cols() == 0 ? Matrix::identity(f, m.dim()) : stacked.left_kernel());
    out.socle_rows = soc.row_space_basis();
    for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
        Matrix comp = (out.socle_rows * m.action(v)).row_space_basis();
        out.socle_component_rows.push_back(comp);
        out.socle_multiplicities.push_back(comp.rows());
    }
    return out;
}

Module dual_module(const Module& m, const AlgebraPtr& opposite) {
    std::vector<Matrix> action;
    for (int i = 0; i < m.algebra()->dim(); ++i) action.push_back(m.action(i).transpose());
    std::string nm = m.name().empty() ? "" : "D(" + m.name() + ")";
    return Module(opposite, std::move(action), nm, false);
}

std::string iso_invariant_key(const Module& m) {
    std::string key = "d" + std::to_string(m.dim());
    key += ";v";
    for (int d : m.dimension_vector()) key += std::to_string(d) + ",";
    auto sr = socle_radical(m);
    key += ";s";
    for (int s : sr.socle_multiplicities) key += std::to_string(s) + ",";
    key += ";r" + std::to_string(sr.radical_rows.rows());
    key += ";g";
    for (const auto& g : m.algebra()->generator_coords()) key += std::to_string(m.action_of(g).rank()) + ",";
    return key;
}

std::vector<Matrix> submodules_enumerate(const Module& m, int dim_cap, std::uint64_t budget) {
    Field f = m.field();
    if (f.is_rational())
        throw BudgetExceeded("submodule enumeration needs a finite field");
    std::vector<Matrix> found;
    std::set<std::string> seen;
    std::vector<Matrix> queue;
    Matrix empty(f, 0, m.dim());
    found.push_back(empty);
    seen.insert(empty.byte_key());
    queue.push_back(empty);
    while (!queue.empty()) {
        Matrix rows = queue.back();
        queue.pop_back();
        if (rows.rows() >= std::min(dim_cap, m.dim())) continue;
        auto quot = quotient_by_rows(m, rows);
        auto sr = socle_radical(quot.module);
        for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
            const Matrix& comp = sr.socle_component_rows[v];
            int k = comp.rows();
            if (k == 0) continue;
            // All lines of the component: normalized leading-one vectors.
            double lines = 0, pw = 1;
            for (int i = 0; i < k; ++i) {
                lines += pw;
                pw *= f.p;
            }
            if (lines > static_cast<double>(budget))
                throw BudgetExceeded("socle component has " + std::to_string(lines) + " lines");
            std::vector<std::uint64_t> digits(k, 0);
            for (int lead = 0; lead < k; ++lead) {
                // vector = comp[lead] + sum_{i>lead} digits[i] * comp[i]
                std::fill(digits.begin(), digits.end(), 0);
                for (;;) {
                    Matrix vec = comp.row(lead);
                    for (int i = lead + 1; i < k; ++i)
                        if (digits[i]) vec = vec + comp.row(i).scaled(Scalar(f, digits[i]));
                    Matrix lifted = vec * quot.section;
                    Matrix cand_rows = Matrix::vstack(rows, lifted).row_space_basis();
                    std::string key = cand_rows.byte_key();
                    if (seen.insert(key).second) {
                        if (seen.size() > budget) throw BudgetExceeded("submodule count exceeds budget");
                        found.push_back(cand_rows);
                        queue.push_back(cand_rows);
                    }
                    int pos = lead + 1;
                    while (pos < k) {
                        if (++digits[pos] < f.p) break;
                        digits[pos++] = 0;
                    }
                    if (pos >= k) break;
                }
            }
        }
    }
    // include m itself when within the cap
    if (m.dim() <= dim_cap) {
        Matrix full = Matrix::identity(f, m.dim());
        if (seen.insert(full.byte_key()).second) found.push_back(full);
    }
    std::sort(found.begin(), found.end(),
              [](const Matrix& a, const Matrix& b) { return a.rows() < b.rows(); });
    return found;
}

}  // namespace specsupp::algmod
