#pragma once

#include <json.hpp>

#include "cohsys/coherent.hpp"
#include "cohsys/critical.hpp"
#include "cohsys/flips.hpp"
#include "cohsys/pointconfig.hpp"
#include "cohsys/qpoly.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

using nlohmann::json;

// Rationals travel as strings ("p/q" or "p"); polynomials as coefficient
// arrays, low degree first.
void to_json(json& j, const Rational& q);
void from_json(const json& j, Rational& q);
void to_json(json& j, const QPoly& p);
void from_json(const json& j, QPoly& p);

void to_json(json& j, const CsType& cs);
void from_json(const json& j, CsType& cs);
void to_json(json& j, const SubsystemData& sub);
void from_json(const json& j, SubsystemData& sub);
void to_json(json& j, const AlphaLinear& alpha);
void from_json(const json& j, AlphaLinear& alpha);

void to_json(json& j, const Witness& w);
void to_json(json& j, const CriticalValue& cv);
void to_json(json& j, const Discrepancy& d);
void to_json(json& j, const Comparison& c);
void to_json(json& j, const FlipDims& d);

/// Array of [x, y, z] coordinate triples.
json points_to_json(const PointConfig& z);
PointConfig points_from_json(const json& j);

/// Adds "<key>_float" siblings next to every string value that parses as a
/// rational, recursively. The exact strings are left untouched.
json with_float_annotations(const json& j);

}  // namespace cohsys
