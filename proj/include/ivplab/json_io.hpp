#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ivplab/construct.hpp"
#include "ivplab/element.hpp"
#include "ivplab/engine.hpp"
#include "ivplab/ffpoly.hpp"
#include "ivplab/oracle.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

using json = nlohmann::json;

// Integers are decimal strings throughout; small counts (N, exponents,
// lengths) are JSON numbers. Parse errors throw std::invalid_argument.

json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const json& j);

BigInt bigint_from_json(const json& j, const std::string& what);

json witness_to_json(const ConstructionWitness& w);
/// Reads the stored fields and recomputes F and the certificates; does not
/// validate (see validate_witness).
ConstructionWitness witness_from_json(const json& j);

json certificate_to_json(const IrreducibilityCertificate& c);
json report_to_json(const FactorizationReport& r);
json classes_to_json(const std::vector<EssentialClass>& classes);

/// {"basis": [poly...], "expo": [k...], "denominator": "d", "sign": +-1 (optional)}
IvpElement element_from_json(const json& j);
json element_to_json(const IvpElement& e);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace ivplab
