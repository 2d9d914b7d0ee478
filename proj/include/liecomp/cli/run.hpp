#pragma once

// Batch front end: one named check per run, a report in text or JSON, and
// exit codes 0 (all pass), 1 (a check failed), 2 (usage or input error).

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "liecomp/findim/io.hpp"
#include "liecomp/octa/so4.hpp"
#include "liecomp/report.hpp"
#include "liecomp/verma/checks.hpp"
#include "liecomp/verma/lattice_equivalence.hpp"

namespace liecomp::cli {

using exact::Rational;
using shiftop::OperatorClass;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"witt-verify",  "witt-extended",   "witt-symmetry", "witt-hs",
                                                 "witt-closed",  "composite-check", "octa-demo",     "remark8"};
  return names;
}

struct RunConfig {
  std::string command;
  int max_index = 3;
  std::string h = "h";
  int truncation = 500;
  int word_length = 4;
  int index_bound = 3;
  int depth = 1;
  std::string mode = "bracket";
  double tolerance = 1e-9;
  std::string format = "text";
  std::string output;

  // composite-check
  std::string composite_path;
  std::string rep_path;
  // octa-demo
  std::vector<unsigned> spins = {1, 1};
  bool irreducible_hint = false;
  // remark8
  std::string r1;
  std::string r2;
  long terms = 10000;
  // witt-hs: relative Cauchy increment allowed at the truncation
  double cauchy = 0.01;
};

struct RunResult {
  int exit_code = kExitPass;
  std::string output;  // the rendered report (empty on usage errors)
  std::string error;   // message for stderr
};

namespace detail {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

/// Appends another report's items and notes, prefixing subjects with its name.
inline void merge(CheckReport& into, const CheckReport& from) {
  for (auto item : from.items) {
    item.subject = from.name + ": " + item.subject;
    into.items.push_back(std::move(item));
  }
  for (const auto& n : from.notes) into.note(from.name + ": " + n);
}

inline verma::HighestWeight weight_of(const RunConfig& c) {
  try {
    return verma::HighestWeight::parse(c.h);
  } catch (const MalformedInput& e) {
    throw UsageError("--h must be 'h' or a rational: " + std::string(e.what()));
  }
}

inline Rational positive_weight(const RunConfig& c) {
  auto h = weight_of(c);
  if (h.is_symbolic()) throw UsageError(c.command + " needs a rational --h > 0");
  if (!h.unitarizable()) throw UsageError(c.command + " needs --h > 0 (got " + h.to_string() + ")");
  return *h.rational();
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline CheckReport witt_hs(const RunConfig& c) {
  const Rational h0 = positive_weight(c);
  require(c.max_index >= 2, "witt-hs needs --max-index >= 2 (mixed pairs start at i = 2, j = -2)");
  const int N = c.truncation;
  CheckReport rep("witt-hs");
  rep.param("max_index", std::to_string(c.max_index))
      .param("h", "h")
      .param("h0", h0.to_string())
      .param("truncation", std::to_string(N))
      .param("cauchy", format_double(c.cauchy))
      .param("scalar", std::string(shiftop::kNumericScalar));
  const auto symbolic = verma::HighestWeight::symbolic();
  bool saw_zero_sum = false;
  for (int i = 2; i <= c.max_index; ++i)
    for (int j = -2; j >= -c.max_index; --j) {
      auto x = verma::Generator::e(i), y = verma::Generator::e(j);
      auto dev = verma::deviation(x, y, symbolic);
      auto cls = shiftop::classify(dev);
      auto sums = shiftop::hs_partial_sums(dev, N, h0);
      double full = sums.back();
      double half = sums[static_cast<std::size_t>(N / 2)];
      double increment = full == 0 ? 0 : (full - half) / full;
      saw_zero_sum = saw_zero_sum || full == 0;
      bool ok = shiftop::within(cls, OperatorClass::hilbert_schmidt) && increment < c.cauchy;
      auto& item = rep.add("[" + x.to_string() + ", " + y.to_string() + "]", ok ? Verdict::pass : Verdict::fail,
                           "S_N=" + format_double(full) + "; S_N/2=" + format_double(half) +
                               "; relative increment=" + format_double(increment));
      item.operator_class = std::string(shiftop::to_string(cls));
    }
  rep.note("growth exponents are integers, so a compact deviation is automatically Hilbert-Schmidt");
  if (saw_zero_sum) rep.note("some deviations vanish identically at h0; their partial sums are 0 and pass trivially");
  return rep;
}

inline verma::ClosureMode mode_of(const RunConfig& c) {
  if (c.mode == "literal") return verma::ClosureMode::literal;
  if (c.mode == "bracket") return verma::ClosureMode::bracket;
  throw UsageError("--mode must be literal or bracket");
}

inline CheckReport composite_check(const RunConfig& c) {
  require(!c.composite_path.empty(), "composite-check needs a composite file");
  auto comp = findim::composite_from_json(findim::parse_json_text(read_file(c.composite_path), c.composite_path));
  CheckReport rep = findim::check_axioms(comp);
  rep.name = "composite-check";
  rep.param("composite", c.composite_path);
  if (!c.rep_path.empty()) {
    rep.param("rep", c.rep_path);
    auto json = findim::parse_json_text(read_file(c.rep_path), c.rep_path);
    if (findim::representation_is_floating(json)) {
      auto t = findim::representation_from_json<double>(json, comp);
      rep.param("tolerance", format_double(c.tolerance));
      merge(rep, findim::check_representation(comp, t, c.tolerance));
    } else {
      auto t = findim::representation_from_json<findim::GaussianRational>(json, comp);
      merge(rep, findim::check_representation(comp, t));
    }
  }
  return rep;
}

inline CheckReport octa_demo(const RunConfig& c, ordered_json& extra) {
  CheckReport rep("octa-demo");
  const auto oct = octa::build_octahedron();
  rep.add("labels", octa::labels_consistent() ? Verdict::pass : Verdict::fail,
          "faces share one vertex, each vertex on two faces, each edge on one face");
  merge(rep, findim::check_axioms(oct));
  merge(rep, octa::so4_certificate());
  auto extraction_of = [&](const auto& t, bool hint, double tol) {
    auto ex = octa::extract_so4(t, hint, tol);
    merge(rep, ex.verdict);
    extra = ex.to_json();
  };
  if (!c.rep_path.empty()) {
    rep.param("rep", c.rep_path);
    auto json = findim::parse_json_text(read_file(c.rep_path), c.rep_path);
    if (findim::representation_is_floating(json)) {
      rep.param("tolerance", format_double(c.tolerance));
      extraction_of(findim::representation_from_json<double>(json, oct), c.irreducible_hint, c.tolerance);
    } else {
      extraction_of(findim::representation_from_json<findim::GaussianRational>(json, oct), c.irreducible_hint, 0);
    }
  } else {
    require(c.spins.size() == 2, "--spins takes two values two_j1,two_j2");
    rep.param("two_j1", std::to_string(c.spins[0])).param("two_j2", std::to_string(c.spins[1]));
    auto t = octa::so4_composite_rep(c.spins[0], c.spins[1]);
    merge(rep, findim::check_representation(oct, t));
    extraction_of(t, c.irreducible_hint, 0);
  }
  rep.param("irreducible_hint", c.irreducible_hint ? "true" : "false");
  return rep;
}

inline CheckReport remark8(const RunConfig& c) {
  const Rational h0 = positive_weight(c);
  require(c.terms >= 2, "--terms must be >= 2");
  require(c.r1.empty() == c.r2.empty(), "remark8 needs both --r1 and --r2, or neither");
  CheckReport rep("remark8");
  rep.param("h0", h0.to_string()).param("terms", std::to_string(c.terms)).param("variable", "x");
  std::vector<std::pair<std::string, std::string>> cases;
  if (c.r1.empty()) {
    rep.note("no --r1/--r2 given; running the built-in examples (equal, constant difference, degree -1 difference)");
    cases = {{"x/(x+1)", "x/(x+1)"}, {"x+1", "x"}, {"1/(x+1)+x", "x"}};
  } else {
    cases = {{c.r1, c.r2}};
  }
  for (const auto& [a, b] : cases) {
    verma::RationalUnivariate r1, r2;
    try {
      r1 = exact::parse_univariate(a, "x");
      r2 = exact::parse_univariate(b, "x");
    } catch (const MalformedInput& e) {
      throw UsageError(std::string("cannot parse rational function: ") + e.what());
    }
    bool eq = verma::lattice_equivalent(r1, r2, h0);
    auto probe = verma::lattice_probe(r1, r2, h0, c.terms);
    bool agree = eq == probe.converges;
    auto& item = rep.add("R1=" + a + "; R2=" + b, agree ? Verdict::pass : Verdict::fail,
                         std::string("equivalent=") + (eq ? "true" : "false") + "; probe " +
                             (probe.converges ? "converges" : "diverges") + " (S=" + format_double(probe.full) +
                             ", S_half=" + format_double(probe.half) + ")");
    item.residual = exact::to_string(r1 - r2, "x");
  }
  return rep;
}

inline CheckReport dispatch(const RunConfig& c, ordered_json& extra) {
  require(c.format == "text" || c.format == "json", "--format must be text or json");
  const std::string& cmd = c.command;
  auto needs_k = [&] { require(c.max_index >= 1, "--max-index must be >= 1"); };
  if (cmd == "witt-verify") {
    needs_k();
    return verma::check_witt_composite(c.max_index, weight_of(c));
  }
  if (cmd == "witt-extended") {
    needs_k();
    return verma::check_extended_composite(c.max_index, weight_of(c));
  }
  if (cmd == "witt-symmetry") {
    needs_k();
    require(c.word_length >= 2, "--word-length must be >= 2");
    require(c.index_bound >= 0, "--index-bound must be >= 0");
    auto h = weight_of(c);
    CheckReport rep("witt-symmetry");
    rep.param("max_index", std::to_string(c.max_index))
        .param("word_length", std::to_string(c.word_length))
        .param("index_bound", std::to_string(c.index_bound))
        .param("h", h.to_string());
    merge(rep, verma::check_symmetric(c.max_index, h));
    merge(rep, verma::check_absolutely_symmetric(c.word_length, c.index_bound, h));
    return rep;
  }
  if (cmd == "witt-hs") {
    require(c.truncation >= 2, "--truncation must be >= 2");
    return witt_hs(c);
  }
  if (cmd == "witt-closed") {
    require(c.depth >= 1, "--depth must be >= 1");
    require(c.index_bound >= 0, "--index-bound must be >= 0");
    return verma::check_absolutely_closed(c.depth, c.index_bound, weight_of(c), mode_of(c));
  }
  if (cmd == "composite-check") return composite_check(c);
  if (cmd == "octa-demo") return octa_demo(c, extra);
  if (cmd == "remark8") return remark8(c);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace detail

inline ordered_json report_json(const std::string& command, const CheckReport& rep, const ordered_json& extra) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : rep.params) p[k] = v;
  j["params"] = p;
  j["pass"] = rep.pass();
  ordered_json items = ordered_json::array();
  for (const auto& i : rep.items) items.push_back(CheckReport::item_json(i));
  j["items"] = items;
  j["notes"] = rep.notes;
  if (!extra.is_null()) j["extraction"] = extra;
  return j;
}

/// Runs one command. Never throws for bad input; errors become exit 2.
inline RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    ordered_json extra;
    CheckReport rep = detail::dispatch(config, extra);
    result.exit_code = rep.pass() ? kExitPass : kExitFail;
    if (config.format == "json") {
      result.output = report_json(config.command, rep, extra).dump(2) + "\n";
    } else {
      result.output = "schema " + std::to_string(kSchemaVersion) + "\n" + rep.to_text();
    }
  } catch (const detail::UsageError& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const MalformedInput& e) {
    return {kExitUsage, {}, std::string("malformed input: ") + e.what()};
  } catch (const PoleError& e) {
    return {kExitUsage, {}, std::string("pole: ") + e.what()};
  } catch (const DomainError& e) {
    return {kExitUsage, {}, std::string("domain error: ") + e.what()};
  } catch (const DimensionMismatch& e) {
    return {kExitUsage, {}, std::string("dimension mismatch: ") + e.what()};
  } catch (const NegativeExponentError& e) {
    return {kExitUsage, {}, std::string("negative exponent: ") + e.what()};
  }
  if (!config.output.empty()) {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) return {kExitUsage, {}, "cannot write " + config.output};
    out << result.output;
  }
  return result;
}

}  // namespace liecomp::cli
