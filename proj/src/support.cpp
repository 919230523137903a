#include "specsupp/support.hpp"

#include <algorithm>
#include <set>

namespace specsupp::support {

using algmod::direct_sum;
using algmod::is_isomorphic;
using algmod::socle_radical;
using algmod::submodule_from_rows;
using algmod::submodules_enumerate;
using algmod::quotient_by_rows;
using exactla::Field;
using exactla::RowSpan;
using exactla::Scalar;

std::vector<std::string> SupportSet::labels(const ModuleCategory& cat) const {
    std::vector<std::string> out;
    for (int i = 0; i < cat.points(); ++i)
        if (mask & (1ull << i)) out.push_back(cat.injective_label(i));
    return out;
}

SupportSet support_union(const SupportSet& a, const SupportSet& b) {
    return SupportSet{a.algebra, a.mask | b.mask};
}
SupportSet support_intersect(const SupportSet& a, const SupportSet& b) {
    return SupportSet{a.algebra, a.mask & b.mask};
}
SupportSet support_complement(const ModuleCategory& cat, const SupportSet& a) {
    std::uint64_t full = (cat.points() >= 64) ? ~0ull : ((1ull << cat.points()) - 1);
    return SupportSet{a.algebra, ~a.mask & full};
}
SupportSet full_support(const ModuleCategory& cat) {
    return SupportSet{cat.algebra(), (1ull << cat.points()) - 1};
}
SupportSet support_from_labels(const ModuleCategory& cat, const std::vector<std::string>& labels) {
    SupportSet s{cat.algebra(), 0};
    for (const auto& l : labels) s.mask |= 1ull << cat.injective_index_by_label(l);
    return s;
}

SupportSet supp(const ModuleCategory& cat, const Module& m) {
    return SupportSet{cat.algebra(), cat.spectral_image(m).support_mask()};
}

SuppEx supp_ex(const ModuleCategory& cat, const Module& m, int max_terms) {
    SuppEx out;
    out.resolution = cat.min_inj_resolution(m, max_terms);
    out.set = SupportSet{cat.algebra(), out.resolution.support_union_mask()};
    out.complete = out.resolution.complete_or_periodic() || out.set == full_support(cat);
    return out;
}

SupportSet supp_join_family(const ModuleCategory& cat, const std::vector<Module>& modules) {
    SupportSet joined{cat.algebra(), 0};
    std::vector<Module> parts;
    for (const auto& m : modules) {
        joined = support_union(joined, supp(cat, m));
        if (m.dim() > 0) parts.push_back(m);
    }
    Module sum = parts.empty() ? cat.zero_module() : direct_sum(parts).module;
    SupportSet via_sum = supp(cat, sum);
    if (!(via_sum == joined))
        throw InvalidInput("support of the direct sum differs from the join of supports");
    return joined;
}

bool class_membership(const ModuleCategory& cat, const Module& m, const ClassifiedSubcategory& c,
                      int max_terms) {
    auto ess = [&] { return supp(cat, m).subset_of(c.data); };
    auto coh = [&] {
        auto se = supp_ex(cat, m, max_terms);
        if (!se.complete)
            throw IncompleteResolution("supp_ex truncated at " + std::to_string(max_terms) +
                                       " terms; raise max_terms");
        return se.set.subset_of(c.data);
    };
    switch (c.kind) {
        case SubcatKind::essentially_closed:
            return ess();
        case SubcatKind::cohomologically_stable:
            return coh();
        case SubcatKind::stable_localising_candidate:
            return ess() && coh();
    }
    return false;
}

Module DecompositionLattice::witness_for(const ModuleCategory& cat, std::uint64_t atom_mask) const {
    std::vector<Module> parts;
    for (size_t a = 0; a < atom_witnesses.size(); ++a)
        if (atom_mask & (1ull << a)) parts.push_back(atom_witnesses[a]);
    if (parts.empty()) return cat.zero_module();
    return direct_sum(parts).module;
}

DecompositionLattice decomposition_lattice(const ModuleCategory& cat, const Module& x,
                                           std::uint64_t seed) {
    if (!cat.is_injective(x, seed)) throw NotInjective("decomposition lattice needs an injective module");
    DecompositionLattice out;
    out.support = supp(cat, x);

    // Group the indecomposable summands by their (singleton) support.
    auto dec = cat.decompose(x, seed);
    std::map<int, std::vector<int>> by_point;  // Sp index -> summand indices
    for (size_t i = 0; i < dec.summands.size(); ++i) {
        SupportSet s = supp(cat, dec.summands[i]);
        int point = -1;
        for (int v = 0; v < cat.points(); ++v)
            if (s.mask == (1ull << v)) point = v;
        if (point < 0)
            throw InvalidInput("summand of an injective module has non-singleton support");
        by_point[point].push_back(static_cast<int>(i));
    }
    std::vector<std::string> labels;
    for (auto& [point, idxs] : by_point) {
        labels.push_back(cat.injective_label(point));
        out.atom_points.push_back(point);
        Field f = cat.field();
        Matrix rows(f, 0, x.dim());
        std::vector<Module> parts;
        for (int i : idxs) {
            rows = Matrix::vstack(rows, dec.summand_rows[i]);
            parts.push_back(dec.summands[i]);
        }
        out.atom_rows.push_back(rows.row_space_basis());
        out.atom_witnesses.push_back(direct_sum(parts).module);
    }
    if (out.support.mask != [&] {
            std::uint64_t m = 0;
            for (int p : out.atom_points) m |= 1ull << p;
            return m;
        }())
        throw InvalidInput("summand grouping does not cover supp(X)");
    out.ring = std::make_shared<boolring::BoolRing>(labels);

    // Cross-check against the central idempotent route.
    auto endo = cat.endo_central_idempotents(x, seed);
    out.endo_block_count = endo.block_count;
    if (endo.block_count != static_cast<int>(labels.size()))
        throw InvalidInput("D(X) atom count disagrees with B(End(X)/J)");
    return out;
}

std::vector<Module> realize_decomposition(const ModuleCategory& cat, const Module& x,
                                          const std::vector<SupportSet>& partition,
                                          std::uint64_t seed) {
    auto lattice = decomposition_lattice(cat, x, seed);
    std::uint64_t seen = 0;
    for (const auto& part : partition) {
        if (part.mask & ~lattice.support.mask)
            throw NotAPartition("partition part leaves supp(X)");
        if (part.mask & seen) throw NotAPartition("partition parts are not disjoint");
        seen |= part.mask;
    }
    if (seen != lattice.support.mask) throw NotAPartition("partition does not cover supp(X)");
    std::vector<Module> out;
    for (const auto& part : partition) {
        std::uint64_t atom_mask = 0;
        for (size_t a = 0; a < lattice.atom_points.size(); ++a)
            if (part.mask & (1ull << lattice.atom_points[a])) atom_mask |= 1ull << a;
        out.push_back(lattice.witness_for(cat, atom_mask));
    }
    // Explicit isomorphism witness: stacked atom rows give a change of basis.
    Field f = cat.field();
    Matrix stacked(f, 0, x.dim());
    for (const auto& rows : lattice.atom_rows) stacked = Matrix::vstack(stacked, rows);
    if (stacked.rows() != x.dim() || !stacked.try_inverse())
        throw InvalidInput("realized summands do not reassemble the module");
    return out;
}

namespace {

// Iso-class pool with cheap invariant bucketing.
class IsoPool {
public:
    explicit IsoPool(std::uint64_t seed) : seed_(seed) {}

    // Returns the index of the iso class, inserting a rep if new.
    int add(const Module& m, bool* inserted_out = nullptr) {
        std::string key = algmod::iso_invariant_key(m);
        auto& bucket = buckets_[key];
        for (int idx : bucket)
            if (is_isomorphic(reps_[idx], m, seed_)) {
                if (inserted_out) *inserted_out = false;
                return idx;
            }
        reps_.push_back(m);
        bucket.push_back(static_cast<int>(reps_.size()) - 1);
        if (inserted_out) *inserted_out = true;
        return static_cast<int>(reps_.size()) - 1;
    }

    bool contains(const Module& m) {
        std::string key = algmod::iso_invariant_key(m);
        auto it = buckets_.find(key);
        if (it == buckets_.end()) return false;
        for (int idx : it->second)
            if (is_isomorphic(reps_[idx], m, seed_)) return true;
        return false;
    }

    const std::vector<Module>& reps() const { return reps_; }

private:
    std::uint64_t seed_;
    std::vector<Module> reps_;
    std::map<std::string, std::vector<int>> buckets_;
};

bool is_semisimple_module(const Module& m) { return algmod::radical_rows(m).rows() == 0; }

}  // namespace

ClosureResult localising_closure(const ModuleCategory& cat, const std::vector<Module>& generators,
                                 int dim_cap, std::uint64_t budget, std::uint64_t seed) {
    Field f = cat.field();
    ClosureResult out;
    IsoPool pool(seed);
    pool.add(cat.zero_module());
    std::vector<int> worklist;
    auto add = [&](const Module& m) {
        if (m.dim() > dim_cap) return;
        bool inserted = false;
        int idx = pool.add(m, &inserted);
        if (inserted) {
            worklist.push_back(idx);
            if (pool.reps().size() > budget) throw BudgetExceeded("closure corpus exceeds budget");
        }
    };
    for (const auto& g : generators) {
        if (g.dim() > dim_cap) throw InvalidInput("generator exceeds dim_cap");
        add(g);
    }

    // Fixed point under submodules, quotients, sums, extensions.
    bool changed = true;
    while (changed) {
        changed = false;
        ++out.iterations;
        // submodules and quotients
        for (size_t w = 0; w < pool.reps().size(); ++w) {
            Module m = pool.reps()[w];
            if (m.dim() == 0) continue;
            size_t before = pool.reps().size();
            if (is_semisimple_module(m)) {
                // Iso classes of submodules and quotients of a semisimple
                // module are the componentwise-smaller semisimple modules.
                auto mults = socle_radical(m).socle_multiplicities;
                std::vector<int> cur(mults.size(), 0);
                for (;;) {
                    add(cat.semisimple_module(cur));
                    size_t pos = 0;
                    while (pos < cur.size()) {
                        if (++cur[pos] <= mults[pos]) break;
                        cur[pos++] = 0;
                    }
                    if (pos == cur.size()) break;
                }
            } else {
                auto subs = submodules_enumerate(m, m.dim(), budget);
                for (const auto& rows : subs) {
                    auto sub = submodule_from_rows(m, rows);
                    add(sub.module);
                    auto quot = quotient_by_rows(m, rows);
                    add(quot.module);
                }
            }
            if (pool.reps().size() != before) changed = true;
        }
        // finite direct sums
        {
            size_t n = pool.reps().size();
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) {
                    const Module &a = pool.reps()[i], &b = pool.reps()[j];
                    if (a.dim() == 0 || b.dim() == 0) continue;
                    if (a.dim() + b.dim() > dim_cap) continue;
                    size_t before = pool.reps().size();
                    add(direct_sum({a, b}).module);
                    if (pool.reps().size() != before) changed = true;
                }
        }
        // extensions 0 -> A -> E -> C -> 0 via pullback against E(A) -> coker
        {
            size_t n = pool.reps().size();
            for (size_t ai = 0; ai < n; ++ai)
                for (size_t ci = 0; ci < n; ++ci) {
                    const Module &a = pool.reps()[ai], &c = pool.reps()[ci];
                    if (a.dim() == 0 || c.dim() == 0) continue;
                    if (a.dim() + c.dim() > dim_cap) continue;
                    auto env = cat.injective_envelope(a);
                    auto cok = quotient_by_rows(env.envelope, env.iota.mat.row_space_basis());
                    if (cok.module.dim() == 0) continue;
                    auto homs = algmod::hom_basis(c, cok.module);
                    if (homs.empty()) continue;
                    int h = static_cast<int>(homs.size());
                    double lines = 0, pw = 1;
                    for (int t = 0; t < h; ++t) {
                        lines += pw;
                        pw *= f.is_rational() ? 2 : f.p;
                    }
                    if (f.is_rational() || lines > static_cast<double>(budget))
                        throw BudgetExceeded("extension search: hom space too large");
                    // phi up to scalar: normalized leading-one combinations
                    auto sum_mod = direct_sum({env.envelope, c});
                    std::vector<std::uint64_t> digits(h, 0);
                    for (int lead = 0; lead < h; ++lead) {
                        std::fill(digits.begin(), digits.end(), 0);
                        for (;;) {
                            Matrix phi = homs[lead];
                            for (int t = lead + 1; t < h; ++t)
                                if (digits[t]) phi = phi + homs[t].scaled(Scalar(f, digits[t]));
                            // kernel of E(A) (+) C -> coker, e + c -> pi(e) - phi(c)
                            Matrix map = Matrix::vstack(cok.projection.mat, -phi);
                            Matrix rows = map.left_kernel();
                            size_t before = pool.reps().size();
                            auto ext = submodule_from_rows(sum_mod.module, rows);
                            add(ext.module);
                            if (pool.reps().size() != before) changed = true;
                            int pos = lead + 1;
                            while (pos < h) {
                                if (++digits[pos] < (f.is_rational() ? 2 : f.p)) break;
                                digits[pos++] = 0;
                            }
                            if (pos >= h) break;
                        }
                    }
                }
        }
    }

    out.sigma = SupportSet{cat.algebra(), 0};
    for (const auto& m : pool.reps()) out.sigma = support_union(out.sigma, supp(cat, m));
    out.stable = true;
    for (const auto& m : pool.reps()) {
        if (m.dim() == 0) continue;
        auto env = cat.injective_envelope(m);
        if (env.envelope.dim() > dim_cap || !pool.contains(env.envelope)) {
            out.stable = false;
            out.unstable_witnesses.push_back(m.name().empty()
                                                 ? "module of dim " + std::to_string(m.dim())
                                                 : m.name());
        }
    }
    out.corpus = pool.reps();
    return out;
}

ExactnessReport exactness_property_check(const ModuleCategory& cat, const std::vector<Module>& pool,
                                         int trials, std::uint64_t seed, std::uint64_t budget,
                                         int max_terms) {
    ExactnessReport rep;
    if (pool.empty()) throw InvalidInput("exactness check needs a nonempty pool");
    Rng rng(seed);
    std::vector<std::vector<Matrix>> submodule_cache(pool.size());
    auto se_mask = [&](const Module& m) {
        auto se = supp_ex(cat, m, max_terms);
        if (!se.complete)
            throw IncompleteResolution("supp_ex truncated during exactness check");
        return se.set.mask;
    };
    for (int t = 0; t < trials; ++t) {
        size_t pick = rng.below(pool.size());
        const Module& m = pool[pick];
        if (m.dim() == 0) continue;
        if (submodule_cache[pick].empty())
            submodule_cache[pick] = submodules_enumerate(m, m.dim(), budget);
        const auto& subs = submodule_cache[pick];
        const Matrix& rows = subs[rng.below(subs.size())];
        auto sub = submodule_from_rows(m, rows);
        auto quot = quotient_by_rows(m, rows);
        ++rep.samples;
        std::uint64_t s1 = se_mask(sub.module), s2 = se_mask(m), s3 = se_mask(quot.module);
        std::uint64_t masks[3] = {s1, s2, s3};
        ++rep.sequences_checked;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            ++rep.inclusions_checked;
            if (masks[i] & ~(masks[j] | masks[k])) {
                ++rep.violations;
                if (rep.counterexample.empty())
                    rep.counterexample = "sequence from pool[" + std::to_string(pick) +
                                         "] with submodule of dim " + std::to_string(sub.module.dim());
            }
            ++rep.inclusions_checked;
            if (masks[i] & ~(masks[k] | masks[j])) ++rep.violations;  // symmetric recheck
        }
        // split sequence equality on a sampled pair
        if (t % 4 == 0) {
            const Module& a = pool[rng.below(pool.size())];
            const Module& b = pool[rng.below(pool.size())];
            if (a.dim() > 0 && b.dim() > 0) {
                std::uint64_t lhs = se_mask(direct_sum({a, b}).module);
                std::uint64_t rhs = se_mask(a) | se_mask(b);
                ++rep.split_equalities_checked;
                if (lhs != rhs) {
                    ++rep.violations;
                    if (rep.counterexample.empty()) rep.counterexample = "split sequence equality failed";
                }
            }
        }
    }
    return rep;
}

}  // namespace specsupp::support
