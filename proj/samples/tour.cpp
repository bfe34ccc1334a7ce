// crsg - algebraic geometry over finite completely regular semigroups
//
// Builds T3 = Z2 above the trivial group, recovers its structure from the
// table alone, solves an equation and checks that the union of the two
// coordinate "hyperplanes" x = e and y = e is not algebraic.

#include <iostream>  // for cout

#include "crsg/crsg.hpp"

int main() {
  using namespace crsg;

  auto const  sl = catalog::t3();
  auto const& S  = sl.semigroup();
  std::cout << write_sgp(S);

  auto const d = decompose(S);
  std::cout << "components:";
  for (auto const& c : d.decomposition->spec.components) {
    std::cout << ' ' << c.size();
  }
  std::cout << '\n';

  std::vector<std::string> const vars{"x"};
  EquationSystem const           idem{
      1, {{parse_term("x x", vars, S), parse_term("x", vars, S)}}};
  std::cout << "idempotents:\n" << write_pts(solve(S, idem), S);

  auto const e = *S.index_of("e");
  auto const M = theorem2_counterexample(sl, 1, 0, e);
  std::cout << "M:\n" << write_pts(M, S);

  auto const verdict = decide_algebraic(S, M);
  std::cout << "verdict: " << to_string(verdict.kind) << '\n';
  for (auto const& p : verdict.stuck_points) {
    std::cout << "  cannot separate " << to_string(p, S) << '\n';
  }
}
