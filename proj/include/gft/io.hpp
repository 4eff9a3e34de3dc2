#pragma once

// JSON encodings of series and class parameters.
//
//   series: {"k": 1, "coefficients": [{"nu": 2, "a": 0.25}]}
//   params: {"k": 1, "tau": 1, "mu": 1, "delta": 0, "gamma": 0}
//
// Decoding validates every invariant and reports failures as gft::Error
// with the offending field name.

#include <string>

#include <json.hpp>

#include "gft/bounds.hpp"
#include "gft/classify.hpp"
#include "gft/error.hpp"
#include "gft/series.hpp"

namespace gft {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  require(j.is_object(), Errc::parse, "expected a JSON object", key);
  const auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::parse, std::string("missing field '") + key + "'", key);
  return *it;
}

inline int integer_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  require(v.is_number_integer(), Errc::parse, "expected an integer", key);
  return v.get<int>();
}

inline double number_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  require(v.is_number(), Errc::parse, "expected a number", key);
  return v.get<double>();
}

}  // namespace detail

inline Json to_json(const GapSeries& f) {
  Json coeffs = Json::array();
  for (const auto& [nu, a] : f.coefficients()) coeffs.push_back(Json{{"nu", nu}, {"a", a}});
  return Json{{"k", f.gap()}, {"coefficients", std::move(coeffs)}};
}

inline GapSeries series_from_json(const Json& j) {
  const int k = detail::integer_field(j, "k");
  const Json& list = detail::member(j, "coefficients");
  detail::require(list.is_array(), Errc::parse, "coefficients must be an array", "coefficients");
  GapSeries::Coefficients c;
  for (const Json& entry : list) {
    const int nu = detail::integer_field(entry, "nu");
    const double a = detail::number_field(entry, "a");
    detail::require(c.emplace(nu, a).second, Errc::parse, "duplicate coefficient index", "nu");
  }
  return GapSeries(k, std::move(c));
}

inline Json to_json(const ClassParams& p) {
  return Json{{"k", p.k()}, {"tau", p.tau()}, {"mu", p.mu()}, {"delta", p.delta()}, {"gamma", p.gamma()}};
}

inline ClassParams params_from_json(const Json& j, DeltaRange delta_range = DeltaRange::half_open) {
  return ClassParams::make(detail::integer_field(j, "k"), detail::number_field(j, "tau"),
                           detail::number_field(j, "mu"), detail::number_field(j, "delta"),
                           detail::number_field(j, "gamma"), delta_range);
}

inline Json to_json(const Membership& m) {
  return Json{{"member", m.member}, {"functional", m.functional}, {"margin", m.margin}};
}

inline Json to_json(const RadiusResult& r) {
  return Json{{"r", r.r}, {"nu_star", r.nu_star}, {"capped", r.capped}};
}

inline Json to_json(const Interval& i) { return Json{{"lo", i.lo}, {"hi", i.hi}}; }

inline Json error_json(const Error& e) {
  return Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"field", e.field()}}}};
}

}  // namespace gft
