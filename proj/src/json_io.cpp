#include "cohsys/json_io.hpp"

#include <optional>

#include "cohsys/errors.hpp"

namespace cohsys {

void to_json(json& j, const Rational& q) { j = q.to_string(); }

void from_json(const json& j, Rational& q) {
  if (j.is_string()) {
    q = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else {
    throw PreconditionError("expected a rational string, got " + j.dump());
  }
}

void to_json(json& j, const QPoly& p) {
  j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(c);
}

void from_json(const json& j, QPoly& p) { p = QPoly(j.get<std::vector<Rational>>()); }

void to_json(json& j, const CsType& cs) {
  j = json{{"r", cs.r}, {"t", cs.t}, {"c2", cs.c2}, {"k", cs.k}};
}

void from_json(const json& j, CsType& cs) {
  cs = CsType::make(j.at("r").get<int>(), j.at("t").get<int>(), j.at("c2").get<int>(),
                    j.at("k").get<int>());
}

void to_json(json& j, const SubsystemData& sub) { j = json{{"c1L", sub.c1L}, {"w", sub.w}}; }

void from_json(const json& j, SubsystemData& sub) {
  sub.c1L = j.at("c1L").get<int>();
  sub.w = j.at("w").get<int>();
}

void to_json(json& j, const AlphaLinear& alpha) { j = json{{"a", alpha.a}, {"b", alpha.b}}; }

void from_json(const json& j, AlphaLinear& alpha) {
  alpha.a = j.at("a").get<Rational>();
  alpha.b = j.at("b").get<Rational>();
}

void to_json(json& j, const Witness& w) { j = json{{"s", w.s}, {"w", w.w}}; }

void to_json(json& j, const CriticalValue& cv) {
  j = json{{"a", cv.a}, {"b", cv.b}, {"witnesses", cv.witnesses}};
}

void to_json(json& j, const Discrepancy& d) {
  j = json{{"a", d.a},
           {"b", d.b},
           {"side", to_string(d.side)},
           {"witnesses", d.witnesses},
           {"kind", to_string(d.kind)},
           {"flagged", d.flagged}};
}

void to_json(json& j, const Comparison& c) {
  j = json{{"r", c.r}, {"t", c.t}, {"c2", c.c2}, {"oracle", c.oracle}};
  if (c.closed) {
    j["regime"] = to_string(c.closed->regime);
    if (c.closed->s0) j["s0"] = *c.closed->s0;
    j["closed_form"] = c.closed->values;
  } else {
    j["regime"] = nullptr;
    j["closed_form"] = nullptr;
  }
  j["discrepancies"] = c.discrepancies;
  json notes = json::array();
  for (const auto& n : c.boundary_notes) {
    notes.push_back({{"kind", "unstable-window-boundary"},
                     {"s0", n.s0},
                     {"strict_reading", n.strict_reading},
                     {"inclusive_reading", n.inclusive_reading}});
  }
  j["boundary_notes"] = notes;
  j["unflagged_mismatch"] = c.has_unflagged();
}

void to_json(json& j, const FlipDims& d) {
  j = json{{"ext1", d.ext1}, {"base", d.base}, {"sigma_minus", d.sigma_minus}};
}

json points_to_json(const PointConfig& z) {
  json out = json::array();
  for (const auto& p : z.points()) {
    const auto& c = p.coords();
    out.push_back(json::array({c[0], c[1], c[2]}));
  }
  return out;
}

PointConfig points_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("point file must hold a JSON array");
  PointConfig z;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw PreconditionError("each point must be a triple of rationals");
    }
    z.add(Point(triple[0].get<Rational>(), triple[1].get<Rational>(), triple[2].get<Rational>()));
  }
  return z;
}

json with_float_annotations(const json& j) {
  auto approx = [](const json& v) -> std::optional<double> {
    if (!v.is_string()) return std::nullopt;
    try {
      return Rational::parse(v.get<std::string>()).to_double();
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  };
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(with_float_annotations(v));
    return out;
  }
  if (!j.is_object()) return j;
  json out = json::object();
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[it.key()] = with_float_annotations(it.value());
    if (auto d = approx(it.value())) out[it.key() + "_float"] = *d;
  }
  return out;
}

}  // namespace cohsys
