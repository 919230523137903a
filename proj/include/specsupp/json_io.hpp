#pragma once

#include <json.hpp>

#include "specsupp/datum.hpp"
#include "specsupp/support.hpp"
#include "specsupp/ziegler.hpp"

namespace specsupp::io {

using nlohmann::json;

// {"field":{"p":1009},"quiver":{"vertices":[...],"arrows":[{"name","from","to"}]},
//  "relations":[...],"length_bound":10}
json algebra_to_json(const algmod::Algebra& alg);
algmod::AlgebraPtr algebra_from_json(const json& j, std::optional<std::uint32_t> field_override);

// {"algebra_ref":...,"dim":...,"action":[[...row-major...] per basis element]}
json module_to_json(const algmod::Module& m, const std::string& algebra_ref);
algmod::Module module_from_json(const json& j, const algmod::AlgebraPtr& alg);

// {"algebra_ref":...,"injectives":["I1",...]}
json support_to_json(const support::SupportSet& s, const support::ModuleCategory& cat,
                     const std::string& algebra_ref);

json spectral_to_json(const algmod::SpectralObject& s, const support::ModuleCategory& cat);
json resolution_to_json(const algmod::InjResolution& r, const support::ModuleCategory& cat);

// Hasse diagram of the full Boolean ring: nodes are sorted atom subsets,
// edges the covering relations.
std::string boolring_dot(const boolring::BoolRing& ring);
std::string decomposition_lattice_dot(const support::DecompositionLattice& lat);
json decomposition_lattice_to_json(const support::DecompositionLattice& lat,
                                   const support::ModuleCategory& cat);

json datum_report_to_json(const datum::DatumReport& rep);
json spectrum_to_json(const ziegler::ZieglerSpectrum& z, const support::ModuleCategory& cat);
json correspondence_to_json(const ziegler::CorrespondenceReport& rep);
json closure_to_json(const support::ClosureResult& res, const support::ModuleCategory& cat);
json exactness_to_json(const support::ExactnessReport& rep);

// Resolve a module reference: a builtin name over the category ("0", "S1",
// "I2", "P1", "Lambda", sums like "S1+I2"), or a path to a module JSON file.
algmod::Module resolve_module(const support::ModuleCategory& cat, const std::string& ref);

// The three golden algebra presentations.
extern const char* const kGoldenA2Json;
extern const char* const kGoldenLoopJson;   // k[x]/(x^2)
extern const char* const kGoldenProductJson;  // k x k

}  // namespace specsupp::io
