// crsg - algebraic geometry over finite completely regular semigroups
//
// A strong semilattice of completely regular semigroups with more than one
// component is not an equational domain: for alpha < beta and b in S_beta the
// set
//
//   M = {(x, y) | x = b or y = b} = V(x = b) u V(y = b)
//
// is a union of two algebraic sets but is not algebraic, because no equation
// that holds on M can exclude (a, a) with a = psi_{alpha,beta}(b).
// verify_theorem2 runs the decision procedure on every such M.

#ifndef CRSG_THEOREM2_HPP_
#define CRSG_THEOREM2_HPP_

#include <algorithm>  // for find
#include <cstddef>    // for size_t
#include <string>     // for string
#include <vector>     // for vector

#include "algebraic.hpp"
#include "exception.hpp"
#include "point-set.hpp"
#include "structure.hpp"

namespace crsg {

  inline PointSet theorem2_counterexample(StrongSemilattice const& sl,
                                          element_index_type       alpha,
                                          element_index_type       beta,
                                          element_index_type       b) {
    auto const& omega = sl.omega();
    if (alpha >= omega.size() || beta >= omega.size() || !omega.less(alpha, beta)) {
      throw PreconditionError("theorem2_counterexample: alpha < beta must hold");
    }
    sl.semigroup().validate_index(b);
    if (sl.component_of(b) != beta) {
      throw PreconditionError("theorem2_counterexample: " + sl.semigroup().name(b)
                              + " is not in component " + omega.name(beta));
    }
    std::size_t const n = sl.semigroup().size();
    PointSet          M(n, 2);
    for (element_index_type x = 0; x < n; ++x) {
      element_index_type const p[] = {b, x};
      element_index_type const q[] = {x, b};
      M.insert(p);
      M.insert(q);
    }
    return M;
  }

  struct Theorem2Case {
    element_index_type  alpha;
    element_index_type  beta;
    element_index_type  b;
    // (a, a) with a = psi_{alpha,beta}(b), the point the argument predicts
    // cannot be excluded.
    Point               predicted_point;
    bool                predicted_point_stuck;
    AlgebraicityVerdict verdict;
  };

  struct Theorem2Report {
    std::vector<Theorem2Case> cases;
    std::size_t               not_algebraic = 0;
    std::size_t               algebraic     = 0;
    std::size_t               unknown       = 0;

    // No case is algebraic and every completed case is not algebraic. Unknown
    // cases are listed but do not fail the run.
    bool pass() const noexcept {
      return algebraic == 0;
    }
  };

  inline Theorem2Report verify_theorem2(StrongSemilattice const& sl,
                                        std::size_t              cap) {
    auto const& omega = sl.omega();
    if (omega.size() < 2) {
      throw PreconditionError("verify_theorem2: omega must have more than one "
                              "element");
    }
    Theorem2Report report;
    for (element_index_type beta = 0; beta < omega.size(); ++beta) {
      for (element_index_type alpha = 0; alpha < omega.size(); ++alpha) {
        if (!omega.less(alpha, beta)) {
          continue;
        }
        for (auto b : sl.elements_of(beta)) {
          auto const M = theorem2_counterexample(sl, alpha, beta, b);
          auto const a = sl.apply_psi(alpha, beta, b);
          Theorem2Case c{alpha, beta, b, {a, a}, false,
                         decide_algebraic(sl.semigroup(), M, cap)};
          auto const& stuck = c.verdict.stuck_points;
          c.predicted_point_stuck
              = std::find(stuck.begin(), stuck.end(), c.predicted_point)
                != stuck.end();
          switch (c.verdict.kind) {
            case AlgebraicityVerdict::Kind::algebraic:
              ++report.algebraic;
              break;
            case AlgebraicityVerdict::Kind::not_algebraic:
              ++report.not_algebraic;
              break;
            case AlgebraicityVerdict::Kind::unknown:
              ++report.unknown;
              break;
          }
          report.cases.push_back(std::move(c));
        }
      }
    }
    return report;
  }

}  // namespace crsg

#endif  // CRSG_THEOREM2_HPP_
