#include "specsupp/ziegler.hpp"

#include <algorithm>
#include <map>

namespace specsupp::ziegler {

using algmod::AlgebraPtr;
using algmod::Arrow;
using algmod::direct_sum;
using algmod::end_basis;
using algmod::is_isomorphic;
using exactla::Field;
using exactla::Matrix;
using exactla::Scalar;

namespace {

// Compositions of d into nv nonnegative parts.
void dimension_vectors(int d, int nv, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == nv - 1) {
        int used = 0;
        for (int c : cur) used += c;
        cur.push_back(d - used);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int used = 0;
    for (int c : cur) used += c;
    for (int take = 0; take <= d - used; ++take) {
        cur.push_back(take);
        dimension_vectors(d, nv, cur, out);
        cur.pop_back();
    }
}

struct RepShape {
    std::vector<int> dimvec;
    std::vector<int> offsets;  // vertex block offsets in the total space
    int total = 0;
    // per arrow: (from, to, rows, cols) with rows = dim at source
    struct ArrowShape {
        int from, to, rows, cols;
    };
    std::vector<ArrowShape> arrows;
    int entries = 0;
};

RepShape make_shape(const algmod::Quiver& q, const std::vector<int>& dimvec) {
    RepShape s;
    s.dimvec = dimvec;
    int off = 0;
    for (int d : dimvec) {
        s.offsets.push_back(off);
        off += d;
    }
    s.total = off;
    for (const auto& a : q.arrows) {
        RepShape::ArrowShape as{a.from, a.to, dimvec[a.from], dimvec[a.to]};
        s.arrows.push_back(as);
        s.entries += as.rows * as.cols;
    }
    return s;
}

// Build the d x d action matrix of one arrow from its block.
Matrix arrow_action(Field f, const RepShape& s, int arrow, const std::vector<std::uint64_t>& entries,
                    int entry_offset) {
    Matrix m(f, s.total, s.total);
    const auto& as = s.arrows[arrow];
    for (int i = 0; i < as.rows; ++i)
        for (int j = 0; j < as.cols; ++j) {
            m.set_int(s.offsets[as.from] + i, s.offsets[as.to] + j,
                      static_cast<long long>(entries[entry_offset + i * as.cols + j]));
        }
    return m;
}

}  // namespace

EnumerationResult enumerate_indecomposables(const ModuleCategory& cat, int dmax,
                                            std::uint64_t budget, std::uint64_t seed) {
    const AlgebraPtr& alg = cat.algebra();
    Field f = cat.field();
    if (f.is_rational()) throw BudgetExceeded("indecomposable enumeration needs a finite field");
    const auto& quiver = alg->quiver();
    int nv = alg->num_vertices();

    EnumerationResult out;
    out.dmax = dmax;

    // Parse the relations once, as arrow index sequences with coefficients.
    std::vector<algmod::Relation> relations;
    for (const auto& text : alg->relation_texts()) relations.push_back(parse_relation(quiver, text));

    // distinct iso classes of all modules of dim <= dmax
    std::vector<Module> classes;
    std::map<std::string, std::vector<int>> buckets;
    auto add_class = [&](const Module& m) {
        std::string key = algmod::iso_invariant_key(m);
        auto& bucket = buckets[key];
        for (int idx : bucket)
            if (is_isomorphic(classes[idx], m, seed)) return;
        m.validate();
        classes.push_back(m);
        bucket.push_back(static_cast<int>(classes.size()) - 1);
        ++out.iso_classes_seen;
    };

    for (int d = 1; d <= dmax; ++d) {
        std::vector<std::vector<int>> dimvecs;
        std::vector<int> cur;
        dimension_vectors(d, nv, cur, dimvecs);
        for (const auto& dv : dimvecs) {
            RepShape shape = make_shape(quiver, dv);
            // candidate count = p^entries
            double count = 1;
            for (int e = 0; e < shape.entries; ++e) count *= f.p;
            if (out.structures_scanned + count > static_cast<double>(budget))
                throw BudgetExceeded("representation scan exceeds budget at dimension " +
                                     std::to_string(d));
            std::vector<std::uint64_t> entries(shape.entries, 0);
            for (;;) {
                ++out.structures_scanned;
                // arrow actions
                std::vector<Matrix> arrow_mats;
                int off = 0;
                for (size_t a = 0; a < shape.arrows.size(); ++a) {
                    arrow_mats.push_back(arrow_action(f, shape, static_cast<int>(a), entries, off));
                    off += shape.arrows[a].rows * shape.arrows[a].cols;
                }
                // vertex projectors
                std::vector<Matrix> vertex_mats;
                for (int v = 0; v < nv; ++v) {
                    Matrix pv(f, shape.total, shape.total);
                    for (int i = 0; i < dv[v]; ++i) pv.set_int(shape.offsets[v] + i, shape.offsets[v] + i, 1);
                    vertex_mats.push_back(pv);
                }
                // relation check
                bool ok = true;
                for (const auto& rel : relations) {
                    Matrix acc(f, shape.total, shape.total);
                    for (const auto& term : rel) {
                        Matrix prod = Matrix::identity(f, shape.total);
                        for (int ai : term.arrows) prod = prod * arrow_mats[ai];
                        // restrict to the source block of the relation
                        prod = vertex_mats[quiver.arrows[term.arrows.front()].from] * prod;
                        acc = acc + prod.scaled(Scalar::from_int(f, term.coeff));
                    }
                    if (!acc.is_zero()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    // action of every algebra basis path
                    std::vector<Matrix> action;
                    for (int b = 0; b < alg->dim(); ++b) {
                        const auto& path = alg->basis()[b];
                        if (path.arrows.empty()) {
                            action.push_back(vertex_mats[path.source]);
                        } else {
                            Matrix prod = vertex_mats[path.source];
                            for (int ai : path.arrows) prod = prod * arrow_mats[ai];
                            action.push_back(prod);
                        }
                    }
                    add_class(Module(alg, std::move(action), "", false));
                }
                // odometer
                size_t pos = 0;
                while (pos < entries.size()) {
                    if (++entries[pos] < f.p) break;
                    entries[pos++] = 0;
                }
                if (pos == entries.size()) break;
                if (shape.entries == 0) break;
            }
        }
    }

    // Decompose every class, dedupe the indecomposable summands.
    std::vector<Module> indec;
    std::map<std::string, std::vector<int>> ind_buckets;
    auto add_indec = [&](const Module& m) {
        std::string key = algmod::iso_invariant_key(m);
        auto& bucket = ind_buckets[key];
        for (int idx : bucket)
            if (is_isomorphic(indec[idx], m, seed)) return;
        indec.push_back(m);
        bucket.push_back(static_cast<int>(indec.size()) - 1);
    };
    for (const auto& m : classes) {
        auto dec = cat.decompose(m, seed);
        for (const auto& rep : dec.class_reps)
            if (rep.dim() <= dmax) add_indec(rep);
    }
    std::sort(indec.begin(), indec.end(), [](const Module& a, const Module& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return algmod::iso_invariant_key(a) < algmod::iso_invariant_key(b);
    });
    for (size_t i = 0; i < indec.size(); ++i) indec[i].set_name("M" + std::to_string(i));
    out.indecomposables = indec;
    int max_dim = 0;
    for (const auto& m : indec) max_dim = std::max(max_dim, m.dim());
    out.finiteness_certificate = 2 * max_dim <= dmax;
    return out;
}

ZieglerSpectrum ziegler_spectrum(const ModuleCategory& cat, int dmax, std::uint64_t budget,
                                 std::uint64_t seed) {
    auto enumr = enumerate_indecomposables(cat, dmax, budget, seed);
    ZieglerSpectrum z;
    z.points = enumr.indecomposables;
    z.discrete = true;
    z.finiteness_certificate = enumr.finiteness_certificate;
    z.dmax = dmax;
    return z;
}

CorrespondenceReport definable_correspondence_check(const ModuleCategory& cat,
                                                    const ZieglerSpectrum& spectrum,
                                                    std::uint64_t seed) {
    CorrespondenceReport rep;
    int n = static_cast<int>(spectrum.points.size());
    rep.spectrum_size = n;
    if (n > 20) throw BudgetExceeded("too many spectrum points for a 2^n subset scan");

    // Locality certificate: End(M)/J is a division ring for every point,
    // i.e. the primitive idempotent system of End(M) is a single idempotent.
    for (const auto& m : spectrum.points) {
        auto endo = cat.endo_central_idempotents(m, seed);
        if (endo.primitive_idempotents.size() != 1) rep.all_points_local = false;
    }

    for (std::uint64_t subset = 0; subset < (1ull << n); ++subset) {
        ++rep.subsets_checked;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (subset & (1ull << i)) members.push_back(i);
        // Bounded corpus: sums of up to three members (with repetition);
        // every summand of every sum must land back in the subset.
        std::vector<std::vector<int>> combos;
        for (size_t a = 0; a < members.size(); ++a) {
            combos.push_back({members[a]});
            for (size_t b = a; b < members.size(); ++b) {
                combos.push_back({members[a], members[b]});
                if (members.size() <= 4)
                    for (size_t c = b; c < members.size(); ++c)
                        combos.push_back({members[a], members[b], members[c]});
            }
        }
        for (const auto& combo : combos) {
            std::vector<Module> parts;
            for (int i : combo) parts.push_back(spectrum.points[i]);
            Module sum = direct_sum(parts).module;
            auto dec = cat.decompose(sum, seed);
            ++rep.closure_tests;
            for (const auto& piece : dec.class_reps) {
                bool in_subset = false;
                for (int i : members)
                    if (is_isomorphic(piece, spectrum.points[i], seed)) in_subset = true;
                if (!in_subset) {
                    rep.all_subsets_closed = false;
                    if (rep.counterexample.empty())
                        rep.counterexample =
                            "subset mask " + std::to_string(subset) + " leaks a summand of dim " +
                            std::to_string(piece.dim());
                }
            }
        }
    }
    return rep;
}

}  // namespace specsupp::ziegler
