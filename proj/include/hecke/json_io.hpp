#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hecke/satake.hpp"

namespace hecke {

// ordered_json keeps term order stable so serialized files are diffable
using Json = nlohmann::ordered_json;

Json laurent_to_json(const LaurentScalar& s);
LaurentScalar laurent_from_json(const Json& j);

Json fraction_to_json(const ScalarFraction& f);
ScalarFraction fraction_from_json(const Json& j);

Json lattice_to_json(const LatticeElt& x);
LatticeElt lattice_from_json(const Json& j, int dim);

// Weyl elements travel as reduced words (1-based letters); any word is
// accepted and canonicalized on read.
Json weyl_to_json(const RootDatum& rd, const WeylElt& w);
WeylElt weyl_from_json(const RootDatum& rd, const Json& j);

Json im_to_json(const RootDatum& rd, const ImElement& f);
ImElement im_from_json(const RootDatum& rd, const Json& j);

Json bern_to_json(const RootDatum& rd, const BernElement& f);
BernElement bern_from_json(const RootDatum& rd, const Json& j);

Json ga_to_json(const GroupAlgElement& g);

using ParsedElement = std::variant<ImElement, BernElement>;
ParsedElement element_from_json(const RootDatum& rd, const Json& j);

struct EngineConfig {
    std::string type = "A1";
    LatticeKind lattice = LatticeKind::sc;
    std::optional<CustomRootData> custom;
};

EngineConfig config_from_json(const Json& j);
RootDatum build_from_config(const EngineConfig& cfg);
LatticeKind lattice_kind_from_string(const std::string& s);

// human-readable renderings for --format text
std::string im_to_text(const RootDatum& rd, const ImElement& f);
std::string bern_to_text(const RootDatum& rd, const BernElement& f);
std::string ga_to_text(const GroupAlgElement& g);

}  // namespace hecke
