#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "superweyl/gl21.hpp"

namespace superweyl {

using nlohmann::json;

// Weight coordinates serialize as integers when integral and as reduced
// "k/2" strings otherwise, so integral weights stay plain integer arrays.
inline json weight_to_json(const Weight& w) {
  json arr = json::array();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    long long h = w.half(i);
    if (h % 2 == 0)
      arr.push_back(h / 2);
    else
      arr.push_back(std::to_string(h) + "/2");
  }
  return arr;
}

inline Weight weight_from_json(const json& j) {
  check_input(j.is_array() && !j.empty(), "weight JSON must be a nonempty array");
  std::vector<long long> halves;
  halves.reserve(j.size());
  for (const json& c : j) {
    if (c.is_number_integer()) {
      halves.push_back(2 * c.get<long long>());
    } else if (c.is_string()) {
      std::string s = c.get<std::string>();
      std::size_t slash = s.find('/');
      check_input(slash != std::string::npos && s.substr(slash + 1) == "2",
                  "weight coordinate strings must look like k/2");
      halves.push_back(std::stoll(s.substr(0, slash)));
    } else {
      fail_input("weight coordinates must be integers or k/2 strings");
    }
  }
  return Weight::halves(std::move(halves));
}

// Canonical form: terms sorted by exponent (the map order), coefficients as
// decimal strings so arbitrary precision survives the trip.
inline json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["exponent"] = weight_to_json(Weight::halves(e));
    term["coeff"] = c.str();
    arr.push_back(term);
  }
  return arr;
}

inline LaurentPoly poly_from_json(int dim, const json& j) {
  check_input(j.is_array(), "polynomial JSON must be an array");
  LaurentPoly p(dim);
  for (const json& term : j) {
    check_input(term.contains("exponent") && term.contains("coeff"),
                "polynomial terms need exponent and coeff");
    Weight e = weight_from_json(term["exponent"]);
    const json& c = term["coeff"];
    Coeff coeff = c.is_string() ? Coeff(c.get<std::string>())
                                : Coeff(c.get<long long>());
    p.add_term(e, coeff);
  }
  return p;
}

inline json root_to_json(const Root& a, const Superdim& d) {
  json j;
  j["i"] = a.i + 1;
  j["j"] = a.j + 1;
  j["parity"] = a.parity(d);
  return j;
}

inline json root_system_to_json(const RootSystem& sys) {
  json j;
  j["m"] = sys.dim.m;
  j["n"] = sys.dim.n;
  j["w"] = sys.w.one_line();
  j["standard"] = sys.standard;
  json even = json::array(), odd = json::array(), simple = json::array();
  for (const Root& a : sys.phi0_plus) even.push_back(root_to_json(a, sys.dim));
  for (const Root& a : sys.phi1_plus) odd.push_back(root_to_json(a, sys.dim));
  for (const Root& a : sys.simple) simple.push_back(root_to_json(a, sys.dim));
  j["phi0_plus"] = even;
  j["phi1_plus"] = odd;
  j["simple"] = simple;
  j["rho0"] = weight_to_json(sys.rho0);
  j["rho1"] = weight_to_json(sys.rho1);
  j["rho"] = weight_to_json(sys.rho);
  if (decompose(sys.w, sys.dim).w0.is_identity()) {
    json kb = json::object();
    for (const auto& [i, k] : kempf_bounds(sys).k) kb[std::to_string(i)] = k;
    j["kempf_bounds"] = kb;
  }
  WalkResult walk = walk_to_standard(sys);
  json steps = json::array();
  for (const Root& a : walk.steps) steps.push_back(root_to_json(a, sys.dim));
  j["walk_to_standard"] = {{"steps", steps},
                           {"t", walk.t},
                           {"delta_rho", weight_to_json(walk.delta_rho)},
                           {"end_w", walk.end.w.one_line()}};
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["tag"] = verdict_tag_name(v.tag);
  j["provenance"] = v.provenance;
  if (v.tag == VerdictTag::ConcentratedAt) j["degree"] = v.degree;
  if (v.tag == VerdictTag::Undetermined) j["reason"] = v.reason;
  if (v.description) {
    j["description"] = {
        {"w_prime", v.description->w_prime.one_line()},
        {"lambda_prime", weight_to_json(v.description->lambda_prime)},
        {"parity", v.description->parity}};
  }
  if (v.character) j["character"] = poly_to_json(*v.character);
  return j;
}

inline json coh_class_to_json(const CohClass& c) {
  json j;
  j["kind"] = coh_kind_name(c.kind);
  if (c.character) j["character"] = poly_to_json(*c.character);
  if (c.weight) j["weight"] = weight_to_json(*c.weight);
  return j;
}

inline json gl21_to_json(const Gl21Answer& g) {
  json j;
  j["h0"] = coh_class_to_json(g.h0);
  j["h1"] = coh_class_to_json(g.h1);
  j["regime"] = g.regime;
  j["atypical"] = g.atypical;
  j["max_degree"] = Gl21Answer::max_degree;
  j["chi"] = poly_to_json(g.chi);
  j["provenance"] = g.provenance;
  return j;
}

inline json series_layer_to_json(const SeriesLayer& s) {
  return json{{"weight", weight_to_json(s.weight)}, {"parity", s.parity}};
}

inline json gl11_to_json(const Gl11Structure& g) {
  json j;
  j["simple"] = g.simple;
  j["abs_lambda"] = g.abs_lambda;
  j["weights"] = {series_layer_to_json(g.weights[0]),
                  series_layer_to_json(g.weights[1])};
  if (g.iso_minus_target)
    j["iso_minus_target"] = series_layer_to_json(*g.iso_minus_target);
  if (g.series)
    j["series"] = {{"top", series_layer_to_json((*g.series)[0])},
                   {"socle", series_layer_to_json((*g.series)[1])}};
  j["character"] = poly_to_json(g.character);
  return j;
}

inline json parabolic_to_json(const ParabolicStructure& s, const Superdim& d) {
  json j;
  j["alpha"] = root_to_json(s.alpha, d);
  {
    std::ostringstream os;
    os << s.pairing.numerator();
    if (s.pairing.denominator() != 1) os << '/' << s.pairing.denominator();
    j["pairing"] = os.str();
  }
  j["simple"] = s.simple;
  j["w_prime"] = s.w_prime.one_line();
  j["weights"] = {series_layer_to_json(s.weights[0]),
                  series_layer_to_json(s.weights[1])};
  if (s.iso_target) j["iso_target"] = series_layer_to_json(*s.iso_target);
  if (s.b_series)
    j["b_series"] = {{"top", series_layer_to_json((*s.b_series)[0])},
                     {"socle", series_layer_to_json((*s.b_series)[1])}};
  if (s.bprime_series)
    j["bprime_series"] = {{"top", series_layer_to_json((*s.bprime_series)[0])},
                          {"socle", series_layer_to_json((*s.bprime_series)[1])}};
  return j;
}

}  // namespace superweyl
