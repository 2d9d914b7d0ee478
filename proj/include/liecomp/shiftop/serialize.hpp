#pragma once

#include <json.hpp>

#include "liecomp/exact/expression.hpp"
#include "liecomp/shiftop/shift_operator.hpp"

namespace liecomp::shiftop {

using ordered_json = nlohmann::ordered_json;

/// [{"shift": d, "coeff": "<expression in n, h>"}, ...] in increasing shift.
inline ordered_json to_json(const ShiftOperator& a) {
  ordered_json arr = ordered_json::array();
  for (const auto& [d, c] : a.components()) arr.push_back({{"shift", d}, {"coeff", exact::to_string(c)}});
  return arr;
}

inline ShiftOperator shift_operator_from_json(const ordered_json& j) {
  if (!j.is_array()) throw MalformedInput("shift operator must be a JSON array");
  ShiftOperator r;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("shift") || !item.contains("coeff") || !item["shift"].is_number_integer() ||
        !item["coeff"].is_string())
      throw MalformedInput("shift operator component needs integer 'shift' and string 'coeff'");
    r += ShiftOperator::component(item["shift"].get<int>(), exact::parse_qhn(item["coeff"].get<std::string>()));
  }
  return r;
}

/// Compact one-line rendering, e.g. "{(-1, n), (1, 1)}".
inline std::string to_string(const ShiftOperator& a) {
  if (a.is_zero()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& [d, c] : a.components()) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(d) + ", " + exact::to_string(c) + ")";
  }
  return s + "}";
}

}  // namespace liecomp::shiftop
