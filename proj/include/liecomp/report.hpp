#pragma once

// Machine-readable verdicts shared by every checker.

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace liecomp {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { pass, fail, info };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::info: return "info";
  }
  return "?";
}

struct CheckItem {
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> operator_class;
  std::optional<std::string> residual;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

  CheckReport& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  CheckItem& add(std::string subject, Verdict v, std::string detail = {}) {
    items.push_back(CheckItem{std::move(subject), v, std::nullopt, std::nullopt, std::move(detail)});
    return items.back();
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  bool pass() const {
    return std::none_of(items.begin(), items.end(), [](const CheckItem& i) { return i.verdict == Verdict::fail; });
  }
  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [v](const CheckItem& i) { return i.verdict == v; }));
  }
  const CheckItem* first_failure() const {
    auto it = std::find_if(items.begin(), items.end(), [](const CheckItem& i) { return i.verdict == Verdict::fail; });
    return it == items.end() ? nullptr : &*it;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["check"] = name;
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["pass"] = pass();
    ordered_json arr = ordered_json::array();
    for (const auto& i : items) arr.push_back(item_json(i));
    j["items"] = arr;
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }

  static ordered_json item_json(const CheckItem& i) {
    ordered_json it;
    it["subject"] = i.subject;
    it["verdict"] = to_string(i.verdict);
    if (i.operator_class) it["class"] = *i.operator_class;
    if (i.residual) it["residual"] = *i.residual;
    if (!i.detail.empty()) it["detail"] = i.detail;
    return it;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << name << ": " << (pass() ? "PASS" : "FAIL") << " (" << count(Verdict::pass) << " pass, "
       << count(Verdict::fail) << " fail, " << count(Verdict::info) << " info)\n";
    for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
    for (const auto& i : items) {
      os << "  [" << to_string(i.verdict) << "] " << i.subject;
      if (i.operator_class) os << "  class=" << *i.operator_class;
      if (!i.detail.empty()) os << "  " << i.detail;
      if (i.residual) os << "\n      residual: " << *i.residual;
      os << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
  }
};

}  // namespace liecomp
