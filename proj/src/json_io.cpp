#include "charpoly/json_io.hpp"

#include <fstream>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

std::vector<Rational> list_from_json(const json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  for (const auto& v : arr) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

SymbolSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("a symbol must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "A" && key != "B" && key != "C" && key != "D" && key != "symmetric") {
      throw ParseError("unknown symbol field \"" + key + "\"");
    }
  }
  auto a = list_from_json(j, "A");
  auto c = list_from_json(j, "C");
  if (j.value("symmetric", false)) {
    if (j.contains("B") || j.contains("D")) throw ParseError("symmetric symbols take only A and C");
    return make_symmetric(std::move(a), std::move(c));
  }
  return make_symbol(std::move(a), list_from_json(j, "B"), std::move(c), list_from_json(j, "D"));
}

json to_json(const SymbolSpec& spec) {
  json j;
  j["A"] = to_json(spec.a);
  j["B"] = to_json(spec.b);
  j["C"] = to_json(spec.c);
  j["D"] = to_json(spec.d);
  return j;
}

json to_json(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity;
  j["inputs"] = r.inputs;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["equal"] = r.equal;
  return j;
}

json to_json(const SwapTerm& t) {
  json j;
  j["mask_a"] = t.mask_a;
  j["mask_b"] = t.mask_b;
  j["sign"] = t.sign;
  j["swap_factor"] = to_json(t.swap_factor);
  j["z_value"] = to_json(t.z_value);
  j["value"] = to_json(t.term);
  return j;
}

json to_json(const McEstimate& e) {
  json j;
  j["mean"] = e.mean;
  j["stderr"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["failures"] = e.failures;
  return j;
}

GridFile load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("grid file " + path + ": " + e.what());
  }
  GridFile out;
  const json* specs = &j;
  if (j.is_object()) {
    if (!j.contains("specs")) throw ParseError("grid file object needs a \"specs\" array");
    specs = &j.at("specs");
    if (j.contains("sizes")) {
      for (const auto& s : j.at("sizes")) {
        if (!s.is_number_integer() || s.get<long>() < 0) throw ParseError("sizes must be nonnegative integers");
        out.sizes.push_back(s.get<int>());
      }
    }
  }
  if (!specs->is_array()) throw ParseError("grid file must hold an array of symbols");
  for (const auto& s : *specs) out.specs.push_back(spec_from_json(s));
  return out;
}

}  // namespace charpoly
