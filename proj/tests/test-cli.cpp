// crsg - algebraic geometry over finite completely regular semigroups

#include <sys/wait.h>  // for WEXITSTATUS

#include <cstdlib>     // for system
#include <filesystem>  // for temp_directory_path
#include <sstream>     // for ostringstream
#include <string>      // for string

#include "catch_amalgamated.hpp"
#include "commands.hpp"

using namespace crsg;
using namespace crsg::cli;

namespace {
  std::string sample(std::string const& name) {
    return std::string(CRSG_SAMPLES_DIR) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  template <typename F>
  Run run(F&& f) {
    std::ostringstream out, err;
    int const          code = f(out, err);
    return {code, out.str(), err.str()};
  }

  RunConfig text() {
    return {};
  }

  RunConfig machine() {
    RunConfig c;
    c.machine = true;
    return c;
  }

  int shell(std::string const& args) {
    auto const status = std::system(
        (std::string(CRSG_CLI) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  }

  std::string temp(std::string const& name) {
    return (std::filesystem::temp_directory_path() / ("crsg-test-" + name)).string();
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("check", "[cli]") {
  auto const t3 = run([](auto& o, auto& e) { return cmd_check(sample("T3.sgp"), text(), o, e); });
  CHECK(t3.code == 0);
  CHECK(contains(t3.out, "c.r.: yes\n"));
  CHECK(contains(t3.out, "simple: no\n"));
  CHECK(contains(t3.out, "completely simple: no\n"));
  CHECK(contains(t3.out, "j-classes: {e a} {f}\n"));

  auto const z3 = run([](auto& o, auto& e) { return cmd_check(sample("Z3.sgp"), text(), o, e); });
  CHECK(z3.code == 0);
  CHECK(contains(z3.out, "\nsimple: yes\n"));
  CHECK(contains(z3.out, "completely simple: yes\n"));

  auto const bad
      = run([](auto& o, auto& e) { return cmd_check(sample("malformed.sgp"), text(), o, e); });
  CHECK(bad.code == input_error);
  CHECK(contains(bad.err, "line 4"));
  CHECK(bad.out.empty());

  auto const na
      = run([](auto& o, auto& e) { return cmd_check(sample("nonassoc.sgp"), text(), o, e); });
  CHECK(na.code == negative);
  CHECK(contains(na.out, "associative: no\n"));

  auto const m
      = run([](auto& o, auto& e) { return cmd_check(sample("T3.sgp"), machine(), o, e); });
  CHECK(contains(m.out, "completely_regular=yes\n"));
  CHECK(contains(m.out, "j_classes=e,a;f\n"));

  auto const missing
      = run([](auto& o, auto& e) { return cmd_check(sample("nope.sgp"), text(), o, e); });
  CHECK(missing.code == input_error);
}

TEST_CASE("build", "[cli]") {
  auto const t3 = run([](auto& o, auto& e) {
    return cmd_build(sample("T3.slat"), std::nullopt, text(), o, e);
  });
  CHECK(t3.code == 0);
  CHECK(t3.out == "3\ntop:e top:a bot:f\ntop:e top:a bot:f\ntop:a top:e bot:f\nbot:f bot:f bot:f\n");

  auto const again = run([](auto& o, auto& e) {
    return cmd_build(sample("T3.slat"), std::nullopt, text(), o, e);
  });
  CHECK(again.out == t3.out);

  auto const path = temp("t3.sgp");
  auto const file = run([&](auto& o, auto& e) {
    return cmd_build(sample("T3.slat"), path, text(), o, e);
  });
  CHECK(file.code == 0);
  CHECK(read_file(path) == t3.out);
  CHECK(read_file(path + ".labels") == "top:e top\ntop:a top\nbot:f bot\n");

  auto const broken = run([](auto& o, auto& e) {
    return cmd_build(sample("broken.slat"), std::nullopt, text(), o, e);
  });
  CHECK(broken.code == invalid_spec);
  CHECK(contains(broken.err, "violation"));
  CHECK(broken.out.empty());
}

TEST_CASE("decompose", "[cli]") {
  auto const built = temp("built.sgp");
  REQUIRE(run([&](auto& o, auto& e) {
            return cmd_build(sample("T3.slat"), built, text(), o, e);
          }).code
          == 0);
  auto const d = run([&](auto& o, auto& e) {
    return cmd_decompose(built, std::nullopt, text(), o, e);
  });
  CHECK(d.code == 0);
  CHECK(d.out == write_slat(parse_slat(read_file(sample("T3.slat")))));

  auto const z3 = run([](auto& o, auto& e) {
    return cmd_decompose(sample("Z3.sgp"), std::nullopt, text(), o, e);
  });
  CHECK(z3.code == 0);
  CHECK(parse_slat(z3.out).components.size() == 1);

  auto const null2 = run([](auto& o, auto& e) {
    return cmd_decompose(sample("null2.sgp"), std::nullopt, text(), o, e);
  });
  CHECK(null2.code == decompose_error);
  CHECK(contains(null2.err, "precondition"));
}

TEST_CASE("solve", "[cli]") {
  auto const idem = run([](auto& o, auto& e) {
    return cmd_solve(sample("T3.sgp"), sample("idempotent.eqs"), text(), o, e);
  });
  CHECK(idem.code == 0);
  CHECK(idem.out == "arity 1\ne\nf\n");

  auto const eqs = temp("empty.eqs");
  write_file(eqs, "vars x\n");
  auto const all = run([&](auto& o, auto& e) {
    return cmd_solve(sample("T3.sgp"), eqs, text(), o, e);
  });
  CHECK(all.out == "arity 1\ne\na\nf\n");

  write_file(eqs, "vars x\na = f\n");
  auto const none = run([&](auto& o, auto& e) {
    return cmd_solve(sample("T3.sgp"), eqs, text(), o, e);
  });
  CHECK(none.out == "arity 1\n");

  write_file(eqs, "vars x\nx = g\n");
  auto const unknown = run([&](auto& o, auto& e) {
    return cmd_solve(sample("T3.sgp"), eqs, text(), o, e);
  });
  CHECK(unknown.code == input_error);
  CHECK(contains(unknown.err, "line 2, column 5"));
}

TEST_CASE("algebraic", "[cli]") {
  auto const pts = temp("single.pts");
  write_file(pts, "arity 1\na\n");
  auto const single = run([&](auto& o, auto& e) {
    return cmd_algebraic(sample("T3.sgp"), pts, text(), o, e);
  });
  CHECK(single.code == 0);
  CHECK(contains(single.out, "verdict: Algebraic\n"));
  CHECK(contains(single.out, "witness:\nvars x1\n"));

  auto const M = run([](auto& o, auto& e) {
    return cmd_algebraic(sample("T3.sgp"), sample("M.pts"), text(), o, e);
  });
  CHECK(M.code == negative);
  CHECK(contains(M.out, "verdict: NotAlgebraic\n"));
  CHECK(contains(M.out, "stuck-point: (a,a)\n"));
  CHECK(contains(M.out, "complete: yes\n"));

  RunConfig tiny;
  tiny.cap     = 2;
  auto const u = run([&](auto& o, auto& e) {
    return cmd_algebraic(sample("T3.sgp"), sample("M.pts"), tiny, o, e);
  });
  CHECK(u.code == unknown);
  CHECK(contains(u.out, "verdict: Unknown\n"));
}

TEST_CASE("theorem2", "[cli]") {
  auto const t3 = run([](auto& o, auto& e) { return cmd_theorem2(sample("T3.slat"), text(), o, e); });
  CHECK(t3.code == 0);
  CHECK(contains(t3.out,
                 "case: alpha=bot beta=top b=top:e verdict=NotAlgebraic"));
  CHECK(contains(t3.out, "result: PASS\n"));
  CHECK(contains(t3.out, "cases: 2\n"));

  auto const diamond
      = run([](auto& o, auto& e) { return cmd_theorem2(sample("diamond.slat"), text(), o, e); });
  CHECK(diamond.code == 0);
  CHECK(contains(diamond.out, "unknown: 0\n"));

  auto const again = run([](auto& o, auto& e) { return cmd_theorem2(sample("T3.slat"), text(), o, e); });
  CHECK(again.out == t3.out);

  auto const m = run([](auto& o, auto& e) { return cmd_theorem2(sample("T3.slat"), machine(), o, e); });
  CHECK(contains(m.out, "record=case alpha=bot"));
  CHECK(contains(m.out, "result=PASS\n"));

  auto const single = temp("single.slat");
  write_file(single, "omega\n1\nw\nw\ncomponent w\n1\nf\nf\n");
  CHECK(run([&](auto& o, auto& e) { return cmd_theorem2(single, text(), o, e); }).code
        == invalid_spec);
  CHECK(run([](auto& o, auto& e) { return cmd_theorem2(sample("broken.slat"), text(), o, e); })
            .code
        == invalid_spec);
}

TEST_CASE("the executable's exit codes", "[cli]") {
  CHECK(shell("check " + sample("T3.sgp")) == 0);
  CHECK(shell("check " + sample("malformed.sgp")) == 2);
  CHECK(shell("check " + sample("nonassoc.sgp")) == 1);
  CHECK(shell("build " + sample("broken.slat")) == 3);
  CHECK(shell("decompose " + sample("null2.sgp")) == 4);
  CHECK(shell("solve " + sample("T3.sgp") + " " + sample("idempotent.eqs")) == 0);
  CHECK(shell("algebraic " + sample("T3.sgp") + " " + sample("M.pts")) == 1);
  CHECK(shell("algebraic --cap 2 " + sample("T3.sgp") + " " + sample("M.pts")) == 5);
  CHECK(shell("--deterministic --machine theorem2 " + sample("T3.slat")) == 0);
  CHECK(shell("theorem2 " + sample("T3.slat") + " --machine") == 0);
  CHECK(shell("frobnicate") == 2);
  CHECK(shell("") == 2);
}
