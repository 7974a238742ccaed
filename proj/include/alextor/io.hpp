#pragma once

// Input files (TOML presentations, representations, monodromy) and JSON
// serialization of polynomials and based complexes.

#include "alextor/foxcalc.hpp"
#include "alextor/complexes.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace alextor {

using Json = nlohmann::json;

/// `source` names the input in diagnostics. All loaders throw InputError with
/// file:line:column locations.
Presentation presentation_from_toml(std::string_view text, const std::string& source);
Presentation load_presentation(const std::string& path);

Representation representation_from_toml(std::string_view text, const std::string& source, const Presentation& p);
Representation load_representation(const std::string& path, const Presentation& p);

struct MonodromyInput {
    std::string name;
    unsigned cyclotomic_order = 1;
    CycloMatrix F;
    bool h0_vanishes = false;
};

MonodromyInput monodromy_from_toml(std::string_view text, const std::string& source);
MonodromyInput load_monodromy(const std::string& path);

std::string read_file(const std::string& path);

Json to_json(const CycloNumber& c);
/// {"min_exp", "coeffs", "cyclotomic_order"}
Json to_json(const LaurentPoly& p);
/// {"num", "den", "text"}
Json to_json(const RatFunc& f);
Json to_json(const UnitClass& u, unsigned precision_bits);
Json to_json(const Real& r, int digits = 30);

LaurentPoly laurent_from_json(const Json& j);

/// {"format": "alextor.complex/1", "grading", "cyclotomic_order",
///  "min_degree", "ranks", "boundaries": {"<native degree>": [[...]]}, "labels"}
/// Chain boundaries are keyed by j for d_j : C_j -> C_{j-1}; cochain ones by q
/// for d^q : C^q -> C^{q+1}.
Json complex_to_json(const BasedComplex& c);
BasedComplex complex_from_json(const Json& j, const std::string& source = "complex");
BasedComplex load_complex(const std::string& path);

} // namespace alextor
