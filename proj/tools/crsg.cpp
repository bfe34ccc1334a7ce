// crsg - algebraic geometry over finite completely regular semigroups
//
// Command line front end; see commands.hpp for the subcommands and their
// exit codes.

#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace crsg::cli;

  CLI::App app{"Algebraic sets over finite completely regular semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_flag("--machine", config.machine, "Print key=value records");
  app.add_flag("--deterministic",
               config.deterministic,
               "Single-threaded, reproducible runs (the only mode)");

  std::string                sgp, slat, eqs, pts;
  std::optional<std::string> out_path;

  auto* check = app.add_subcommand("check", "Report properties of a table");
  check->add_option("table", sgp, ".sgp file")->required();

  auto* build = app.add_subcommand(
      "build", "Build a strong semilattice of semigroups from a .slat file");
  build->add_option("spec", slat, ".slat file")->required();
  build->add_option("-o,--output", out_path, "Write the .sgp here (and <out>.labels)");

  auto* decomp = app.add_subcommand(
      "decompose", "Recover a strong semilattice structure from a table");
  decomp->add_option("table", sgp, ".sgp file")->required();
  decomp->add_option("-o,--output", out_path, "Write the .slat here");

  auto* solve = app.add_subcommand("solve", "Solution set of an equation system");
  solve->add_option("table", sgp, ".sgp file")->required();
  solve->add_option("equations", eqs, ".eqs file")->required();

  auto* algebraic = app.add_subcommand(
      "algebraic", "Decide whether a point set is algebraic");
  algebraic->add_option("table", sgp, ".sgp file")->required();
  algebraic->add_option("points", pts, ".pts file")->required();
  algebraic->add_option("--cap", config.cap, "Clone size bound (0: default)");

  auto* theorem2 = app.add_subcommand(
      "theorem2", "Check that V(x=b) u V(y=b) is never algebraic");
  theorem2->add_option("spec", slat, ".slat file")->required();
  theorem2->add_option("--cap", config.cap, "Clone size bound (0: default)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (check->parsed()) {
    return cmd_check(sgp, config, out, err);
  } else if (build->parsed()) {
    return cmd_build(slat, out_path, config, out, err);
  } else if (decomp->parsed()) {
    return cmd_decompose(sgp, out_path, config, out, err);
  } else if (solve->parsed()) {
    return cmd_solve(sgp, eqs, config, out, err);
  } else if (algebraic->parsed()) {
    return cmd_algebraic(sgp, pts, config, out, err);
  }
  return cmd_theorem2(slat, config, out, err);
}
