#include "qsym/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

Rational coefficient_from_json(const Json& c) {
  if (c.is_string()) {
    return Rational::parse(c.get<std::string>());
  }
  if (c.is_number_integer()) {
    return Rational(c.get<long>());
  }
  throw DomainError("coefficient must be a \"num/den\" string or an integer");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({e, c.to_string()}));
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) {
    throw DomainError("Laurent polynomial must be a JSON array of [exponent, coefficient] pairs");
  }
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
      throw DomainError("malformed Laurent term " + t.dump());
    }
    terms.emplace_back(t[0].get<std::int64_t>(), coefficient_from_json(t[1]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const RatFun& f) {
  const RatFun c = f.canonical();
  Json out = Json::object();
  out["num"] = to_json(c.numerator());
  out["den"] = to_json(c.denominator());
  return out;
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw DomainError("rational function must be an object with \"num\" and \"den\"");
  }
  return RatFun(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Json to_json(const CheckParams& params) {
  Json out = Json::object();
  out["n"] = params.n;
  const std::pair<const char*, const std::optional<std::int64_t>*> optional_fields[] = {
      {"r", &params.r}, {"h", &params.h}, {"w1", &params.w1}, {"w2", &params.w2}, {"x", &params.x}};
  for (const auto& [name, field] : optional_fields) {
    if (field->has_value()) {
      out[name] = **field;
    }
  }
  return out;
}

Json to_json(const CheckReport& report, bool with_sides) {
  Json out = Json::object();
  out["identity"] = std::string(identity_name(report.identity));
  out["params"] = to_json(report.params);
  out["holds"] = report.holds;
  if (with_sides || !report.holds) {
    out["lhs"] = to_json(report.lhs);
    out["rhs"] = to_json(report.rhs);
  }
  return out;
}

Json to_json(const ConvergenceReport& report) {
  Json out = Json::object();
  out["family"] = std::string(family_name(report.family));
  Json params = Json::object();
  params["n"] = report.params.n;
  params["r"] = report.params.r;
  if (report.family == Family::weighted) {
    params["h"] = report.params.h;
  }
  params["x"] = report.params.x;
  out["params"] = std::move(params);
  out["p"] = report.p;
  out["q0"] = report.q0.to_string();
  out["target"] = report.target;
  Json points = Json::array();
  for (const auto& pt : report.points) {
    if (pt.valuation.is_infinite()) {
      points.push_back(Json::array({pt.level, "inf"}));
    } else {
      points.push_back(Json::array({pt.level, pt.valuation.value()}));
    }
  }
  out["points"] = std::move(points);
  out["monotone"] = report.monotone;
  return out;
}

}  // namespace qsym
