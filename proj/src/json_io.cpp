#include "specsupp/json_io.hpp"

#include <fstream>

namespace specsupp::io {

using algmod::Algebra;
using algmod::AlgebraPtr;
using algmod::Arrow;
using algmod::Module;
using algmod::Quiver;
using exactla::Field;
using exactla::Matrix;
using exactla::Rational;
using exactla::Scalar;
using support::ModuleCategory;

json algebra_to_json(const Algebra& alg) {
    json j;
    j["field"]["p"] = alg.field().p;
    j["quiver"]["vertices"] = alg.quiver().vertices;
    j["quiver"]["arrows"] = json::array();
    for (const auto& a : alg.quiver().arrows) {
        json ja;
        ja["name"] = a.name;
        ja["from"] = alg.quiver().vertices[a.from];
        ja["to"] = alg.quiver().vertices[a.to];
        j["quiver"]["arrows"].push_back(ja);
    }
    j["relations"] = alg.relation_texts();
    j["length_bound"] = alg.length_bound();
    json basis = json::array();
    for (int i = 0; i < alg.dim(); ++i) basis.push_back(alg.basis_label(i));
    j["basis"] = basis;  // informational: fixes the action-matrix order
    return j;
}

AlgebraPtr algebra_from_json(const json& j, std::optional<std::uint32_t> field_override) {
    if (!j.contains("field") || !j.contains("quiver"))
        throw InvalidInput("algebra JSON needs 'field' and 'quiver'");
    std::uint32_t p = j.at("field").value("p", 1009u);
    if (field_override) p = *field_override;
    Field f = (p == 0) ? Field::rationals() : Field::prime(p);
    Quiver q;
    for (const auto& v : j.at("quiver").at("vertices")) q.vertices.push_back(v.get<std::string>());
    if (j.at("quiver").contains("arrows"))
        for (const auto& a : j.at("quiver").at("arrows")) {
            Arrow ar;
            ar.name = a.at("name").get<std::string>();
            ar.from = q.vertex_index(a.at("from").get<std::string>());
            ar.to = q.vertex_index(a.at("to").get<std::string>());
            q.arrows.push_back(ar);
        }
    std::vector<std::string> relations;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) relations.push_back(r.get<std::string>());
    int length_bound = j.value("length_bound", 10);
    return Algebra::from_quiver(q, relations, f, length_bound);
}

namespace {

Scalar scalar_from_json(const json& v, Field f) {
    if (v.is_number_integer()) return Scalar::from_int(f, v.get<long long>());
    if (v.is_string()) {
        if (!f.is_rational()) throw InvalidInput("string entries only for rational fields");
        return Scalar(f, Rational(v.get<std::string>()));
    }
    throw InvalidInput("matrix entry must be an integer or a rational string");
}

json scalar_to_json(const Scalar& s) {
    if (!s.field().is_rational()) return static_cast<long long>(s.residue());
    const Rational& q = s.rational();
    if (denominator(q) == 1) {
        long long v = 0;
        try {
            v = numerator(q).convert_to<long long>();
            return v;
        } catch (...) {
        }
    }
    return s.str();
}

}  // namespace

json module_to_json(const Module& m, const std::string& algebra_ref) {
    json j;
    j["algebra_ref"] = algebra_ref;
    j["dim"] = m.dim();
    if (!m.name().empty()) j["name"] = m.name();
    json action = json::array();
    for (int b = 0; b < m.algebra()->dim(); ++b) {
        json mat = json::array();
        for (int i = 0; i < m.dim(); ++i)
            for (int k = 0; k < m.dim(); ++k) mat.push_back(scalar_to_json(m.action(b).at(i, k)));
        action.push_back(mat);
    }
    j["action"] = action;
    return j;
}

Module module_from_json(const json& j, const AlgebraPtr& alg) {
    int dim = j.at("dim").get<int>();
    Field f = alg->field();
    std::vector<Matrix> action;
    const auto& arr = j.at("action");
    if (static_cast<int>(arr.size()) != alg->dim())
        throw InvalidInput("module JSON needs one action matrix per algebra basis element (" +
                           std::to_string(alg->dim()) + ")");
    for (const auto& mat : arr) {
        if (static_cast<int>(mat.size()) != dim * dim)
            throw InvalidInput("action matrix entry count must be dim^2");
        Matrix a(f, dim, dim);
        int idx = 0;
        for (const auto& v : mat) {
            a.set(idx / dim, idx % dim, scalar_from_json(v, f));
            ++idx;
        }
        action.push_back(a);
    }
    std::string name = j.value("name", "");
    return Module(alg, std::move(action), name);
}

json support_to_json(const support::SupportSet& s, const ModuleCategory& cat,
                     const std::string& algebra_ref) {
    json j;
    j["algebra_ref"] = algebra_ref;
    j["injectives"] = s.labels(cat);
    return j;
}

json spectral_to_json(const algmod::SpectralObject& s, const ModuleCategory& cat) {
    json j = json::object();
    for (int i = 0; i < cat.points(); ++i)
        if (s.multiplicities[i]) j[cat.injective_label(i)] = s.multiplicities[i];
    return j;
}

json resolution_to_json(const algmod::InjResolution& r, const ModuleCategory& cat) {
    json j;
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(spectral_to_json(t, cat));
    j["terms"] = terms;
    switch (r.status) {
        case algmod::ResolutionStatus::complete:
            j["status"] = "complete";
            break;
        case algmod::ResolutionStatus::periodic:
            j["status"] = "periodic";
            j["preperiod"] = r.preperiod;
            j["period"] = r.period;
            break;
        case algmod::ResolutionStatus::truncated:
            j["status"] = "truncated";
            j["bound"] = r.bound;
            break;
    }
    return j;
}

namespace {

std::string subset_node_label(std::uint64_t mask, const std::vector<std::string>& atoms) {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < atoms.size(); ++i)
        if (mask & (1ull << i)) {
            if (!first) s += ",";
            s += atoms[i];
            first = false;
        }
    return s + "}";
}

std::string hasse_dot(const std::vector<std::string>& atoms) {
    int m = static_cast<int>(atoms.size());
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask)
        out += "  \"" + subset_node_label(mask, atoms) + "\";\n";
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask)
        for (int i = 0; i < m; ++i)
            if (!(mask & (1ull << i)))
                out += "  \"" + subset_node_label(mask, atoms) + "\" -> \"" +
                       subset_node_label(mask | (1ull << i), atoms) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace

std::string boolring_dot(const boolring::BoolRing& ring) { return hasse_dot(ring.atoms()); }

std::string decomposition_lattice_dot(const support::DecompositionLattice& lat) {
    return hasse_dot(lat.ring->atoms());
}

json decomposition_lattice_to_json(const support::DecompositionLattice& lat,
                                   const ModuleCategory& cat) {
    json j;
    j["atoms"] = lat.ring->atoms();
    j["element_count"] = static_cast<std::uint64_t>(lat.ring->element_count());
    j["endo_block_count"] = lat.endo_block_count;
    json witnesses = json::object();
    for (size_t a = 0; a < lat.atom_witnesses.size(); ++a) {
        json w;
        w["dim"] = lat.atom_witnesses[a].dim();
        w["support"] = std::vector<std::string>{cat.injective_label(lat.atom_points[a])};
        witnesses[lat.ring->atoms()[a]] = w;
    }
    j["atom_witnesses"] = witnesses;
    return j;
}

json datum_report_to_json(const datum::DatumReport& rep) {
    json j;
    j["all_passed"] = rep.all_passed;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json cj;
        cj["axiom"] = c.axiom;
        cj["passed"] = c.passed;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["notes"] = rep.notes;
    return j;
}

json spectrum_to_json(const ziegler::ZieglerSpectrum& z, const ModuleCategory& cat) {
    json j;
    j["discrete"] = z.discrete;
    j["finiteness_certificate"] = z.finiteness_certificate;
    j["dmax"] = z.dmax;
    json pts = json::array();
    for (const auto& m : z.points) {
        json p;
        p["name"] = m.name();
        p["dim"] = m.dim();
        p["socle"] = spectral_to_json(cat.spectral_image(m), cat);
        pts.push_back(p);
    }
    j["points"] = pts;
    return j;
}

json correspondence_to_json(const ziegler::CorrespondenceReport& rep) {
    json j;
    j["spectrum_size"] = rep.spectrum_size;
    j["subsets_checked"] = rep.subsets_checked;
    j["closure_tests"] = rep.closure_tests;
    j["all_subsets_closed"] = rep.all_subsets_closed;
    j["definable_class_count"] = static_cast<std::uint64_t>(1ull << rep.spectrum_size);
    j["all_points_local"] = rep.all_points_local;
    if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
    return j;
}

json closure_to_json(const support::ClosureResult& res, const ModuleCategory& cat) {
    json j;
    json members = json::array();
    for (const auto& m : res.corpus) {
        json mm;
        mm["dim"] = m.dim();
        if (!m.name().empty()) mm["name"] = m.name();
        mm["supp"] = supp(cat, m).labels(cat);
        members.push_back(mm);
    }
    j["corpus"] = members;
    j["corpus_size"] = res.corpus.size();
    j["sigma"] = res.sigma.labels(cat);
    j["stable"] = res.stable;
    j["unstable_witnesses"] = res.unstable_witnesses;
    return j;
}

json exactness_to_json(const support::ExactnessReport& rep) {
    json j;
    j["samples"] = rep.samples;
    j["sequences_checked"] = rep.sequences_checked;
    j["inclusions_checked"] = rep.inclusions_checked;
    j["split_equalities_checked"] = rep.split_equalities_checked;
    j["violations"] = rep.violations;
    j["ok"] = rep.ok();
    if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
    return j;
}

Module resolve_module(const ModuleCategory& cat, const std::string& ref) {
    if (ref.find(".json") != std::string::npos) {
        std::ifstream in(ref);
        if (!in) throw InvalidInput("cannot open module file '" + ref + "'");
        json j = json::parse(in);
        return module_from_json(j, cat.algebra());
    }
    // builtin names, possibly summed with '+'
    std::vector<std::string> names;
    std::string cur;
    for (char c : ref) {
        if (c == '+') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    names.push_back(cur);
    std::vector<Module> parts;
    for (const auto& name : names) {
        if (name == "0") continue;
        if (name == "Lambda") {
            parts.push_back(cat.regular());
            continue;
        }
        bool found = false;
        for (int i = 0; i < cat.points() && !found; ++i) {
            if (name == cat.simple_label(i)) {
                parts.push_back(cat.simple(i));
                found = true;
            } else if (name == cat.injective_label(i)) {
                parts.push_back(cat.injective(i));
                found = true;
            } else if (name == "P" + cat.algebra()->quiver().vertices[i]) {
                parts.push_back(cat.projective(i));
                found = true;
            }
        }
        if (!found) throw InvalidInput("unknown module name '" + name + "'");
    }
    if (parts.empty()) return cat.zero_module();
    if (parts.size() == 1) return parts[0];
    Module sum = algmod::direct_sum(parts).module;
    sum.set_name(ref);
    return sum;
}

const char* const kGoldenA2Json = R"({
  "field": {"p": 1009},
  "quiver": {
    "vertices": ["1", "2"],
    "arrows": [{"name": "a", "from": "2", "to": "1"}]
  },
  "relations": [],
  "length_bound": 10
})";

const char* const kGoldenLoopJson = R"({
  "field": {"p": 1009},
  "quiver": {
    "vertices": ["1"],
    "arrows": [{"name": "x", "from": "1", "to": "1"}]
  },
  "relations": ["x*x"],
  "length_bound": 10
})";

const char* const kGoldenProductJson = R"({
  "field": {"p": 1009},
  "quiver": {
    "vertices": ["1", "2"],
    "arrows": []
  },
  "relations": [],
  "length_bound": 10
})";

}  // namespace specsupp::io
