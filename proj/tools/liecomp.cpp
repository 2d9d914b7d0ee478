#include <CLI11.hpp>

#include <iostream>

#include "liecomp/cli/run.hpp"

namespace {

void add_common(CLI::App* sub, liecomp::cli::RunConfig& c) {
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", c.output, "Write the report to this file instead of stdout");
}

void add_weight(CLI::App* sub, liecomp::cli::RunConfig& c) {
  sub->add_option("--h", c.h, "Highest weight: 'h' (symbolic) or a rational p/q");
}

}  // namespace

int main(int argc, char** argv) {
  using liecomp::cli::RunConfig;
  RunConfig c;
  CLI::App app{"Exact checks for Lie composites and their operator representations"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("witt-verify", "In-half Witt relations, exact");
  verify->add_option("--max-index", c.max_index, "Largest |index| K");
  add_weight(verify, c);

  auto* extended = app.add_subcommand("witt-extended", "In-half e-f and f-f relations, exact");
  extended->add_option("--max-index", c.max_index, "Largest |index| K");
  add_weight(extended, c);

  auto* symmetry = app.add_subcommand("witt-symmetry", "Adjoint symmetry and absolute symmetry of degree-0 words");
  symmetry->add_option("--max-index", c.max_index, "Largest |k| for adjoint checks");
  symmetry->add_option("--word-length", c.word_length, "Longest word");
  symmetry->add_option("--index-bound", c.index_bound, "Largest |index| of a letter");
  add_weight(symmetry, c);

  auto* hs = app.add_subcommand("witt-hs", "Classes of mixed deviations and Hilbert-Schmidt partial sums");
  hs->add_option("--max-index", c.max_index, "Largest |index|");
  hs->add_option("--truncation", c.truncation, "Truncation N of the partial sums");
  hs->add_option("--cauchy", c.cauchy, "Allowed relative increment (S_N - S_N/2) / S_N");
  add_weight(hs, c);

  auto* closed = app.add_subcommand("witt-closed", "Absolute closedness of nested commutators");
  closed->add_option("--depth", c.depth, "Nesting depth n");
  closed->add_option("--index-bound", c.index_bound, "Largest |index| of a generator");
  closed->add_option("--mode", c.mode, "literal or bracket")->check(CLI::IsMember({"literal", "bracket"}));
  add_weight(closed, c);

  auto* composite = app.add_subcommand("composite-check", "Axioms of a composite file and optionally a representation");
  composite->add_option("composite", c.composite_path, "Composite JSON file")->required();
  composite->add_option("--rep", c.rep_path, "Representation JSON file");
  composite->add_option("--tolerance", c.tolerance, "Absolute tolerance for floating point matrices");

  auto* octa = app.add_subcommand("octa-demo", "Octahedron composite, so(4) representation and extraction");
  octa->add_option("--spins", c.spins, "two_j1 two_j2")->expected(2)->delimiter(',');
  octa->add_option("--rep", c.rep_path, "Extract from this representation file instead");
  octa->add_flag("--irreducible", c.irreducible_hint, "Assert that the representation is irreducible");
  octa->add_option("--tolerance", c.tolerance, "Absolute tolerance for floating point matrices");

  auto* r8 = app.add_subcommand("remark8", "Square-summable difference of two relations along h0 + j");
  r8->add_option("--r1", c.r1, "First rational function of x");
  r8->add_option("--r2", c.r2, "Second rational function of x");
  r8->add_option("--terms", c.terms, "Terms of the numeric probe");
  add_weight(r8, c);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return liecomp::cli::kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  auto result = liecomp::cli::run(c);
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (c.output.empty()) std::cout << result.output;
  return result.exit_code;
}
