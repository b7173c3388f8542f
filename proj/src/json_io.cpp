#include "ivplab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ivplab {

namespace {

json bigints_to_json(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

unsigned small_uint(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw std::invalid_argument(what + " must be a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v > 1'000'000) throw std::invalid_argument(what + " is out of range");
  return static_cast<unsigned>(v);
}

std::vector<IntPoly> polys_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of polynomials");
  std::vector<IntPoly> out;
  for (const auto& x : j) out.push_back(poly_from_json(x));
  return out;
}

std::vector<BigInt> bigints_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x, what));
  return out;
}

}  // namespace

BigInt bigint_from_json(const json& j, const std::string& what) {
  if (j.is_string()) {
    if (auto v = parse_decimal(j.get<std::string>())) return *v;
  } else if (j.is_number_integer()) {
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  throw std::invalid_argument(what + ": expected a decimal integer string");
}

json poly_to_json(const IntPoly& f) { return json{{"coeffs", bigints_to_json(f.coeffs())}}; }

IntPoly poly_from_json(const json& j) {
  const json& coeffs = field(j, "coeffs");
  return IntPoly(bigints_from_json(coeffs, "coeffs"));
}

json witness_to_json(const ConstructionWitness& w) {
  json g = json::array(), f = json::array();
  for (const auto& x : w.g) g.push_back(poly_to_json(x));
  for (const auto& x : w.f) f.push_back(poly_to_json(x));
  return json{{"N", w.params.N},
              {"p", to_decimal(w.params.p)},
              {"residues", bigints_to_json(w.residues)},
              {"g", g},
              {"f", f},
              {"aux_primes", bigints_to_json(w.aux_primes)},
              {"modulus", to_decimal(w.modulus)},
              {"denominator_exponent", w.denominator_exponent}};
}

ConstructionWitness witness_from_json(const json& j) {
  ConstructionWitness w;
  w.params.N = small_uint(field(j, "N"), "N");
  if (w.params.N < 1 || w.params.N > 1000) throw std::invalid_argument("N out of range");
  w.params.p = bigint_from_json(field(j, "p"), "p");
  w.residues = bigints_from_json(field(j, "residues"), "residues");
  w.g = polys_from_json(field(j, "g"), "g");
  w.f = polys_from_json(field(j, "f"), "f");
  w.aux_primes = bigints_from_json(field(j, "aux_primes"), "aux_primes");
  w.modulus = bigint_from_json(field(j, "modulus"), "modulus");
  const unsigned exponent = small_uint(field(j, "denominator_exponent"), "denominator_exponent");
  for (const auto& fi : w.f)
    if (fi.degree() < 1 || !fi.is_monic()) throw std::invalid_argument("witness f polynomials must be monic, non-constant");
  complete_witness(w);
  w.denominator_exponent = exponent;
  return w;
}

json certificate_to_json(const IrreducibilityCertificate& c) {
  json out{{"verdict", to_string(c.verdict)}, {"method", to_string(c.method)}};
  if (c.method == CertMethod::ModP || c.method == CertMethod::Eisenstein) out["prime"] = std::to_string(c.prime);
  if (c.method == CertMethod::Eisenstein) out["shift"] = to_decimal(c.shift);
  if (c.rational_root) out["rational_root"] = to_decimal(*c.rational_root);
  return out;
}

json report_to_json(const FactorizationReport& r) {
  json fzs = json::array();
  for (const auto& fz : r.factorizations) {
    json factors = json::array();
    for (const auto& f : fz.factors) factors.push_back(json{{"expo", f.expo}, {"denominator", to_decimal(f.denom)}});
    fzs.push_back(json{{"factors", factors}, {"length", fz.length()}});
  }
  return json{{"n", r.n}, {"count", r.count()}, {"factorizations", fzs}};
}

json classes_to_json(const std::vector<EssentialClass>& classes) {
  json fzs = json::array();
  for (const auto& cls : classes) {
    json factors = json::array();
    for (const auto& [expo, denom] : cls) factors.push_back(json{{"expo", expo}, {"denominator", to_decimal(denom)}});
    fzs.push_back(json{{"factors", factors}, {"length", cls.size()}});
  }
  return fzs;
}

IvpElement element_from_json(const json& j) {
  IvpElement e;
  e.basis = polys_from_json(field(j, "basis"), "basis");
  const json& expo = field(j, "expo");
  if (!expo.is_array()) throw std::invalid_argument("expo must be an array");
  for (const auto& k : expo) e.expo.push_back(small_uint(k, "exponent"));
  e.denom = bigint_from_json(field(j, "denominator"), "denominator");
  if (j.contains("sign")) {
    if (!j.at("sign").is_number_integer()) throw std::invalid_argument("sign must be +1 or -1");
    e.sign = j.at("sign").get<int>();
  }
  validate_shape(e);
  return e;
}

json element_to_json(const IvpElement& e) {
  json basis = json::array();
  for (const auto& f : e.basis) basis.push_back(poly_to_json(f));
  return json{{"basis", basis}, {"expo", e.expo}, {"denominator", to_decimal(e.denom)}, {"sign", e.sign}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace ivplab
