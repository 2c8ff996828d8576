// steincalc: command-line front end.
//
//   steincalc <command> [--in FILE | generator] [--word NAME] [--relator NAME]
//             [--baseline NAME=VALUE] [--json-out FILE]
//
// Generators (instead of --in): --tau-boundary G B, --lantern, --chain N, --r-ns.

#include <CLI11.hpp>

#include <fstream>
#include <utility>
#include <iostream>
#include <sstream>

#include "steincalc/commands.hpp"
#include "steincalc/generators.hpp"

using namespace steincalc;

namespace {

struct Args {
  std::string command;
  std::string in;
  std::string json_out;
  std::vector<int> tau_boundary;
  bool lantern = false;
  int chain = 0;
  bool r_ns = false;
  std::vector<std::string> baselines;
  CommandOptions options;
};

Document load(const Args& a) {
  int sources = (a.in.empty() ? 0 : 1) + (a.tau_boundary.empty() ? 0 : 1) + (a.lantern ? 1 : 0) +
                (a.chain > 0 ? 1 : 0) + (a.r_ns ? 1 : 0);
  if (sources != 1) throw PreconditionError("give exactly one of --in, --tau-boundary, --lantern, --chain, --r-ns");
  if (!a.tau_boundary.empty()) return generate_tau_boundary(a.tau_boundary[0], a.tau_boundary[1]);
  if (a.lantern) return generate_lantern();
  if (a.chain > 0) return generate_chain(a.chain);
  if (a.r_ns) return generate_r_ns();
  std::ifstream f(a.in);
  if (!f) throw ParseError(a.in, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_document(ss.str());
}

std::pair<std::string, Int> parse_baseline(const std::string& s) {
  const auto eq = s.rfind('=');
  if (eq == std::string::npos || eq == 0) throw PreconditionError("--baseline expects NAME=VALUE, got '" + s + "'");
  try {
    std::size_t used = 0;
    const Int v = std::stoll(s.substr(eq + 1), &used);
    if (used != s.size() - eq - 1) throw std::invalid_argument("trailing characters");
    return {s.substr(0, eq), v};
  } catch (const std::logic_error&) {
    throw PreconditionError("--baseline value in '" + s + "' is not an integer");
  }
}

CommandResult dispatch(Args& a) {
  for (const std::string& b : a.baselines) a.options.baselines.push_back(parse_baseline(b));
  if (a.command == "family") return run_family(a.options);
  const Document doc = load(a);
  if (a.command == "generate") return {serialize(doc), kExitOk};
  return run(a.command, doc, a.options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn twist factorizations, filling invariants and non-planarity certificates"};
  app.require_subcommand(1);
  Args a;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--in", a.in, "input document (JSON)");
    sub->add_option("--tau-boundary", a.tau_boundary, "generate (Sigma_{g,b}, tau_boundary)")->expected(2);
    sub->add_flag("--lantern", a.lantern, "generate the lantern document");
    sub->add_option("--chain", a.chain, "generate the n-chain document")->check(CLI::PositiveNumber);
    sub->add_flag("--r-ns", a.r_ns, "generate the non-standard relator document");
  };
  auto add_common = [&](CLI::App* sub) {
    add_source(sub);
    sub->add_option("--word", a.options.words, "word name (esig-compare takes two)");
    sub->add_option("--baseline", a.baselines, "asserted sigma, NAME=VALUE");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"invariants", "filling invariants of a positive factorization"},
      {"substitute", "replace one relator side inside a word"},
      {"detect", "look for a non-planarity witness"},
      {"verify-relator", "homology and exponent checks for a relator"},
      {"esig-compare", "compare two fillings"},
      {"generate", "emit a built-in document"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (std::string(name) == "generate") {
      add_source(sub);
    } else {
      add_common(sub);
    }
    if (std::string(name) == "substitute" || std::string(name) == "verify-relator") {
      sub->add_option("--relator", a.options.relator, "relator name");
    }
    if (std::string(name) == "substitute") sub->add_flag("--reverse", a.options.reverse, "replace right side by left");
    if (std::string(name) == "esig-compare")
      sub->add_flag("--assert-same-boundary", a.options.assert_same_boundary,
                    "assert both fillings have the same contact boundary");
    sub->callback([&a, name] { a.command = name; });
  }
  CLI::App* family = app.add_subcommand("family", "tau_boundary sweep over (g, b)");
  family->add_option("--g-max", a.options.g_max)->check(CLI::NonNegativeNumber);
  family->add_option("--b-min", a.options.b_min)->check(CLI::PositiveNumber);
  family->add_option("--b-max", a.options.b_max)->check(CLI::PositiveNumber);
  family->callback([&a] { a.command = "family"; });
  app.add_option("--json-out", a.json_out, "write the report here instead of stdout");
  for (CLI::App* sub : app.get_subcommands({})) sub->add_option("--json-out", a.json_out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  const CommandResult r = run_guarded([&] { return dispatch(a); });
  Json out = r.report;
  // generate emits the bare document so it can be fed back through --in.
  if (a.command == "generate" && r.exit_code == kExitOk) out = out["report"];
  const std::string text = out.dump(2) + "\n";
  if (!a.json_out.empty()) {
    std::ofstream f(a.json_out);
    if (!f) {
      std::cerr << "cannot write " << a.json_out << "\n";
      return kExitPrecondition;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (r.exit_code != kExitOk && !a.json_out.empty()) std::cerr << out.dump() << "\n";
  return r.exit_code;
}
