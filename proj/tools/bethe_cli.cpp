#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"

using namespace bethe::app;

namespace {

struct Args {
  std::string spec, json_out;
  Overrides over;
};

int emit(const RunResult& r, const std::string& path) {
  std::string text = r.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 2;
    }
    f << text;
    std::cerr << r.report.value("status", "error") << "\n";
  }
  return r.exit_code;
}

RunResult input_error(const std::string& command, const std::string& msg) {
  RunResult r;
  r.report = {{"command", command}, {"status", "error"}, {"error", {{"kind", "SchemaError"}, {"message", msg}}}};
  r.exit_code = 2;
  return r;
}

const std::map<std::string, std::string> kHelp{
    {"check-identities", "exact R-matrix and Yangian identities on the problem's chain"},
    {"transfer-eval", "exact transfer matrices T_k(u) at the problem's u"},
    {"bethe-solve", "find XXX Bethe roots from seeded Newton starts"},
    {"bethe-verify", "check given XXX roots: equations, eigenvectors, eigenvalues"},
    {"gaudin-solve", "find Gaudin Bethe roots from seeded Newton starts"},
    {"gaudin-verify", "check given Gaudin roots: equations, eigenvectors, eigenvalues"},
    {"limit-check", "XXX to Gaudin limit identities for the problem (twist K)"},
    {"forms-check", "Shapovalov and deformed form identities"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bethe ansatz checks for gl_N XXX and Gaudin models"};
  app.require_subcommand(1);
  Args args;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("--spec", args.spec, "problem file (JSON)")->required();
    sub->add_option("--seed", args.over.seed, "random seed");
    sub->add_option("--tol", args.over.tol, "numeric tolerance");
    sub->add_option("--samples", args.over.samples, "number of random draws or sample points");
    sub->add_option("--json-out", args.json_out, "write the report here instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(args.spec);
  if (!in) return emit(input_error(command, "cannot read " + args.spec), args.json_out);
  json problem;
  try {
    problem = json::parse(in);
  } catch (const json::exception& e) {
    return emit(input_error(command, e.what()), args.json_out);
  }
  return emit(run_command(command, problem, args.over), args.json_out);
}
