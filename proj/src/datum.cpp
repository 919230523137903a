#include "specsupp/datum.hpp"

#include <algorithm>

namespace specsupp::datum {

using algmod::direct_sum;
using support::supp;
using support::supp_ex;

PointMask SupportDatum::sigma_of(const Module& m) const {
    if (m.dim() == 0) {
        for (const auto& [mod, mask] : table)
            if (mod.dim() == 0) return mask;
    } else if (!m.name().empty()) {
        for (const auto& [mod, mask] : table)
            if (mod.name() == m.name()) return mask;
    }
    if (sigma_callback) {
        auto v = sigma_callback(m);
        if (v) return *v;
    }
    throw MissingSigma("sigma undefined on witness '" + (m.name().empty() ? "?" : m.name()) + "'");
}

SupportDatum tracking_datum(const ModuleCategory& cat, FiniteSpace space,
                            std::vector<std::uint64_t> tracked_atoms, bool exact, int max_terms) {
    if (static_cast<int>(tracked_atoms.size()) != space.size())
        throw InvalidInput("tracking rule needs one atom set per point");
    SupportDatum d;
    d.category = &cat;
    d.space = std::move(space);
    d.exact_flag = exact;
    auto tracked = std::make_shared<std::vector<std::uint64_t>>(std::move(tracked_atoms));
    const ModuleCategory* catp = &cat;
    d.sigma_callback = [catp, tracked, exact, max_terms](const Module& m) -> std::optional<PointMask> {
        std::uint64_t s =
            exact ? supp_ex(*catp, m, max_terms).set.mask : supp(*catp, m).mask;
        PointMask out = 0;
        for (size_t p = 0; p < tracked->size(); ++p)
            if (s & (*tracked)[p]) out |= 1ull << p;
        return out;
    };
    return d;
}

SupportDatum canonical_datum(const ModuleCategory& cat, bool exact, int max_terms) {
    FiniteSpace space;
    for (int i = 0; i < cat.points(); ++i) space.points.push_back(cat.injective_label(i));
    std::vector<std::uint64_t> tracked;
    for (int i = 0; i < cat.points(); ++i) tracked.push_back(1ull << i);
    SupportDatum d = tracking_datum(cat, space, tracked, exact, max_terms);
    // Standard witness set: 0, the simples, the injectives, the cogenerator.
    auto add = [&](Module m) {
        PointMask mask = *d.sigma_callback(m);
        d.table.emplace_back(std::move(m), mask);
    };
    add(cat.zero_module());
    for (int i = 0; i < cat.points(); ++i) add(cat.simple(i));
    for (int i = 0; i < cat.points(); ++i) add(cat.injective(i));
    std::vector<int> ones(cat.points(), 1);
    Module cogen = cat.injective_sum(ones);
    cogen.set_name("cogenerator");
    add(cogen);
    d.full_support_witnesses = {"cogenerator"};
    return d;
}

namespace {

std::string mask_str(PointMask mask, const FiniteSpace& space) {
    std::string s = "{";
    bool first = true;
    for (int p = 0; p < space.size(); ++p)
        if (mask & (1ull << p)) {
            if (!first) s += ",";
            s += space.points[p];
            first = false;
        }
    return s + "}";
}

}  // namespace

DatumReport verify_datum(const SupportDatum& d, int max_terms) {
    if (!d.category) throw InvalidInput("datum has no category");
    const ModuleCategory& cat = *d.category;
    DatumReport rep;
    std::string pre = d.exact_flag ? "E" : "S";
    auto push = [&](const std::string& axiom, bool ok, const std::string& detail) {
        rep.checks.push_back(AxiomCheck{axiom, ok, detail});
        if (!ok) rep.all_passed = false;
    };

    // (S0) sigma(0) is empty.
    {
        PointMask z = d.sigma_of(cat.zero_module());
        push(pre + "0", z == 0, z == 0 ? "sigma(0) = {}" : "sigma(0) = " + mask_str(z, d.space));
    }
    // (S1) designated full-support witnesses cover the space.
    for (const auto& name : d.full_support_witnesses) {
        bool found = false;
        for (const auto& [mod, mask] : d.table)
            if (mod.name() == name) {
                found = true;
                push(pre + "1", mask == d.full_mask(),
                     "sigma(" + name + ") = " + mask_str(mask, d.space));
            }
        if (!found) push(pre + "1", false, "full-support witness '" + name + "' not in the table");
    }
    // (Sv) sigma(X (+) Y) = sigma(X) u sigma(Y) on all witness pairs.
    {
        bool ok = true;
        std::string detail = "all witness pairs";
        for (size_t i = 0; i < d.table.size() && ok; ++i)
            for (size_t j = i; j < d.table.size() && ok; ++j) {
                const auto& [x, sx] = d.table[i];
                const auto& [y, sy] = d.table[j];
                std::vector<Module> parts;
                if (x.dim()) parts.push_back(x);
                if (y.dim()) parts.push_back(y);
                Module sum = parts.empty() ? cat.zero_module() : direct_sum(parts).module;
                PointMask got = d.sigma_of(sum);
                if (got != (sx | sy)) {
                    ok = false;
                    detail = "pair (" + x.name() + ", " + y.name() + "): sigma(sum) = " +
                             mask_str(got, d.space) + " != " + mask_str(sx | sy, d.space);
                }
            }
        push(pre + "v", ok, detail);
    }
    // (S^) sigma(X) n sigma(Y) = sigma(Z) where Z realizes the intersection
    // of the generated subcategories: the sum of injectives over
    // supp(X) n supp(Y) (supp_ex for the exact variant).
    {
        bool ok = true;
        std::string detail = "all witness pairs";
        for (size_t i = 0; i < d.table.size() && ok; ++i)
            for (size_t j = i; j < d.table.size() && ok; ++j) {
                const auto& [x, sx] = d.table[i];
                const auto& [y, sy] = d.table[j];
                std::uint64_t suppx =
                    d.exact_flag ? supp_ex(cat, x, max_terms).set.mask : supp(cat, x).mask;
                std::uint64_t suppy =
                    d.exact_flag ? supp_ex(cat, y, max_terms).set.mask : supp(cat, y).mask;
                std::vector<int> mults(cat.points(), 0);
                for (int v = 0; v < cat.points(); ++v)
                    if ((suppx & suppy) & (1ull << v)) mults[v] = 1;
                Module z = cat.injective_sum(mults);
                PointMask got = d.sigma_of(z);
                if (got != (sx & sy)) {
                    ok = false;
                    detail = "pair (" + x.name() + ", " + y.name() + "): sigma(Z) = " +
                             mask_str(got, d.space) + " != " + mask_str(sx & sy, d.space);
                }
            }
        push(pre + "^", ok, detail);
    }
    // Monotonicity consequence on witness pairs.
    {
        bool ok = true;
        std::string detail = "supp(X) <= supp(Y) implies sigma(X) <= sigma(Y)";
        for (const auto& [x, sx] : d.table)
            for (const auto& [y, sy] : d.table) {
                std::uint64_t suppx =
                    d.exact_flag ? supp_ex(cat, x, max_terms).set.mask : supp(cat, x).mask;
                std::uint64_t suppy =
                    d.exact_flag ? supp_ex(cat, y, max_terms).set.mask : supp(cat, y).mask;
                if ((suppx & ~suppy) == 0 && (sx & ~sy) != 0) {
                    ok = false;
                    detail = "monotonicity fails on (" + x.name() + ", " + y.name() + ")";
                }
            }
        push(pre + "mono", ok, detail);
    }
    // Reported, not checked: the support of the regular module, which need
    // not be full even though Lambda generates the category.
    rep.notes.push_back("supp(Lambda) = " +
                        [&] {
                            auto s = supp(cat, cat.regular());
                            std::string t = "{";
                            auto ls = s.labels(cat);
                            for (size_t i = 0; i < ls.size(); ++i) t += (i ? "," : "") + ls[i];
                            return t + "}";
                        }());
    return rep;
}

UniversalMapResult universal_map(const SupportDatum& d, int max_terms) {
    const ModuleCategory& cat = *d.category;
    auto rep = verify_datum(d, max_terms);
    if (!rep.all_passed) throw InvalidInput("universal_map requires a verified support datum");

    // Induced hom on atoms of S(A): atom {I_i} -> sigma(I_i).
    boolring::BoolHom phi;
    std::vector<std::string> atom_labels;
    for (int i = 0; i < cat.points(); ++i) atom_labels.push_back(cat.injective_label(i));
    phi.source = std::make_shared<boolring::BoolRing>(atom_labels);
    phi.target = boolring::clop_ring(d.space);
    for (int i = 0; i < cat.points(); ++i) phi.atom_images.push_back(d.sigma_of(cat.injective(i)));
    if (!phi.is_valid())
        throw NotALatticeHom("induced atom images are not a disjoint cover of T");

    auto points = boolring::adjunction_transpose(phi, d.space);
    UniversalMapResult out;
    for (const auto& p : points) out.point_to_atom.push_back(p.atom);

    out.factorization_ok = true;
    for (const auto& [x, sx] : d.table) {
        std::uint64_t s = d.exact_flag ? supp_ex(cat, x, max_terms).set.mask : supp(cat, x).mask;
        PointMask pulled = 0;
        for (int p = 0; p < d.space.size(); ++p)
            if (s & (1ull << out.point_to_atom[p])) pulled |= 1ull << p;
        if (pulled != sx) out.factorization_ok = false;
    }
    return out;
}

UniversalityReport verify_universality(const SupportDatum& d, int max_terms) {
    const ModuleCategory& cat = *d.category;
    if (d.space.size() > 4 || cat.points() > 4)
        throw InvalidInput("exhaustive universality check needs |T| <= 4 and |Sp A| <= 4");
    UniversalityReport rep;
    int t = d.space.size(), n = cat.points();

    std::vector<std::uint64_t> witness_supp;
    std::vector<PointMask> witness_sigma;
    for (const auto& [x, sx] : d.table) {
        witness_supp.push_back(d.exact_flag ? supp_ex(cat, x, max_terms).set.mask
                                            : supp(cat, x).mask);
        witness_sigma.push_back(sx);
    }

    std::vector<int> assignment(t, 0);
    std::vector<int> first_match;
    for (;;) {
        ++rep.candidates;
        bool ok = true;
        for (size_t w = 0; w < witness_supp.size() && ok; ++w) {
            PointMask pulled = 0;
            for (int p = 0; p < t; ++p)
                if (witness_supp[w] & (1ull << assignment[p])) pulled |= 1ull << p;
            if (pulled != witness_sigma[w]) ok = false;
        }
        if (ok) {
            ++rep.satisfying;
            if (first_match.empty()) first_match = assignment;
        }
        int pos = 0;
        while (pos < t) {
            if (++assignment[pos] < n) break;
            assignment[pos++] = 0;
        }
        if (pos == t || t == 0) break;
    }
    rep.unique = rep.satisfying == 1;
    rep.ambiguous_witness_set = rep.satisfying > 1;
    if (rep.satisfying >= 1) {
        auto um = universal_map(d, max_terms);
        rep.matches_universal_map = !first_match.empty() && um.point_to_atom == first_match;
        if (rep.ambiguous_witness_set) {
            // With several factorizing maps, check only that the universal map
            // is among them.
            PointMask dummy = 0;
            (void)dummy;
            bool among = true;
            for (size_t w = 0; w < witness_supp.size() && among; ++w) {
                PointMask pulled = 0;
                for (int p = 0; p < t; ++p)
                    if (witness_supp[w] & (1ull << um.point_to_atom[p])) pulled |= 1ull << p;
                if (pulled != witness_sigma[w]) among = false;
            }
            rep.matches_universal_map = among;
        }
    }
    return rep;
}

}  // namespace specsupp::datum
