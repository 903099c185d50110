#pragma once

// JSON serialization for the public value types.
// Group structures: {"free_rank": r, "torsion": [d1, ...]} (numbers when they
// fit in 64 bits, decimal strings otherwise).
// Polynomials: {"degree": n, "modulus": m, "coeffs": ["...", ...]} with
// decimal-string coefficients.

#include <json.hpp>

#include "sl2tor/polyspace.hpp"
#include "sl2tor/smith.hpp"

namespace sl2tor {

inline nlohmann::json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long>());
}

inline nlohmann::json to_json(const AbelianGroupStructure& g) {
  nlohmann::json t = nlohmann::json::array();
  for (const Int& d : g.torsion) t.push_back(int_to_json(d));
  return {{"free_rank", g.free_rank}, {"torsion", t}};
}

inline AbelianGroupStructure group_from_json(const nlohmann::json& j) {
  AbelianGroupStructure g;
  g.free_rank = j.at("free_rank").get<long>();
  for (const auto& d : j.at("torsion")) g.torsion.push_back(int_from_json(d));
  return g;
}

inline nlohmann::json to_json(const HomogeneousPoly& p) {
  nlohmann::json c = nlohmann::json::array();
  for (const Int& x : p.coeffs) c.push_back(x.get_str());
  return {{"degree", p.degree},
          {"modulus", int_to_json(p.ring.modulus)},
          {"coeffs", c}};
}

inline HomogeneousPoly poly_from_json(const nlohmann::json& j) {
  HomogeneousPoly p(j.at("degree").get<long>(),
                    CoefficientRing(int_from_json(j.at("modulus"))));
  const auto& c = j.at("coeffs");
  for (long v = 0; v <= p.degree; ++v)
    p.coeffs[v] = p.ring.reduce(Int(c.at(v).get<std::string>()));
  return p;
}

}  // namespace sl2tor
