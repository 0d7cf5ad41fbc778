// SPDX-License-Identifier: Apache-2.0

#include "gaborlab/funcspec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gaborlab {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) fail(Errc::BadFunctionSpec, "empty element in list \"" + s + "\"");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(Errc::BadFunctionSpec, "bad element \"" + tok + "\"");
    }
    if (pos != tok.size()) fail(Errc::BadFunctionSpec, "bad element \"" + tok + "\"");
    out.push_back(v);
  }
  if (out.empty()) fail(Errc::BadFunctionSpec, "empty element list");
  return out;
}

GroupFunction from_json_values(const nlohmann::json& j, const FiniteGroup& g) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.order())
    fail(Errc::BadFunctionSpec,
         "expected an array of " + std::to_string(g.order()) + " [re, im] pairs");
  CVec v(g.order());
  for (int i = 0; i < g.order(); ++i) {
    const auto& e = j[i];
    if (e.is_number()) {
      v[i] = Complex(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v[i] = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      fail(Errc::BadFunctionSpec, "value " + std::to_string(i) + " is not a number or [re, im] pair");
    }
  }
  return {g, std::move(v)};
}

}  // namespace

ParsedFunction parse_function_spec(const std::string& spec, const FiniteGroup& g, Rng& rng) {
  if (spec.empty()) fail(Errc::BadFunctionSpec, "empty function spec");

  if (spec[0] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const std::exception& e) {
      fail(Errc::BadFunctionSpec, std::string("inline JSON: ") + e.what());
    }
    return {from_json_values(j, g), "inline"};
  }

  const std::string path = spec[0] == '@' ? spec.substr(1) : spec;
  if (spec[0] == '@' || std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadFunctionSpec, "cannot read \"" + path + "\"");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(Errc::BadFunctionSpec, path + ": " + e.what());
    }
    return {from_json_values(j, g), "@" + path};
  }

  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "chi") {
    const auto elems = parse_int_list(rest);
    std::ostringstream canon;
    canon << "chi:";
    for (std::size_t i = 0; i < elems.size(); ++i) canon << (i ? "," : "") << elems[i];
    return {indicator(g, elems), canon.str()};
  }
  if (head == "delta") {
    const auto elems = parse_int_list(rest);
    if (elems.size() != 1) fail(Errc::BadFunctionSpec, "delta takes a single element");
    return {delta(g, elems[0]), "delta:" + std::to_string(elems[0])};
  }
  if (head == "const") {
    if (rest != "1") fail(Errc::BadFunctionSpec, "only const:1 is supported");
    return {constant_one(g), "const:1"};
  }
  if (head == "random") {
    if (rest == "dense") return {random_dense(g, rng), "random:dense"};
    if (rest.rfind("sparse", 0) == 0) {
      const std::string ks = rest.substr(6);
      int k = 0;
      try {
        k = std::stoi(ks);
      } catch (const std::exception&) {
        fail(Errc::BadFunctionSpec, "bad sparsity \"" + ks + "\"");
      }
      if (k < 1 || k > g.order()) fail(Errc::BadFunctionSpec, "sparsity out of range");
      return {random_sparse(g, k, rng), "random:sparse" + std::to_string(k)};
    }
    fail(Errc::BadFunctionSpec, "unknown random family \"" + rest + "\"");
  }
  fail(Errc::BadFunctionSpec, "unrecognized function spec \"" + spec + "\"");
}

}  // namespace gaborlab
