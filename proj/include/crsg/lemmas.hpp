// crsg - algebraic geometry over finite completely regular semigroups
//
// Executable versions of the facts about term values in a strong semilattice
// S = {S_alpha | alpha in Omega} of completely regular semigroups:
//
//   * the value of t lies in the component given by the meet of the
//     components of its constants and of its (occurring) variables;
//   * if a = psi_{alpha,beta}(b), t(b) in S_delta and t(a) in S_gamma, then
//     gamma <= delta and psi_{gamma,delta}(t(b)) = t(a);
//   * if t contains a constant from S_alpha then t(b) and t(a) lie in the same
//     component, and in fact t(b) = t(a).
//
// Each check computes both sides from the tables and reports a witness record.

#ifndef CRSG_LEMMAS_HPP_
#define CRSG_LEMMAS_HPP_

#include <algorithm>  // for any_of
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for string
#include <vector>     // for vector

#include "exception.hpp"
#include "structure.hpp"
#include "term.hpp"

namespace crsg {

  // Components of the constants of t, in left-to-right order, repeats kept.
  inline std::vector<element_index_type>
  constants_components(Term const& t, Labeling const& labeling) {
    std::vector<element_index_type> result;
    for (auto c : constants(t)) {
      result.push_back(component_of(labeling, c));
    }
    return result;
  }

  // The meet of the components of all constants of t and of the components
  // point_components[i] of every variable x_i occurring in t. Declared but
  // absent variables contribute nothing.
  inline element_index_type
  predicted_component(StrongSemilattice const&             sl,
                      Term const&                          t,
                      std::span<element_index_type const> point_components) {
    auto const& omega = sl.omega();
    for (auto c : point_components) {
      if (c >= omega.size()) {
        throw PreconditionError("predicted_component: component index "
                                + std::to_string(c) + " is not in omega");
      }
    }
    std::optional<element_index_type> gamma;
    auto meet_with = [&](element_index_type c) {
      gamma = gamma ? omega.meet(*gamma, c) : c;
    };
    for (auto c : constants_components(t, sl.labeling())) {
      meet_with(c);
    }
    auto const occurring = occurring_variables(t, t.arity());
    for (std::size_t i = 0; i < occurring.size(); ++i) {
      if (!occurring[i]) {
        continue;
      }
      if (i >= point_components.size()) {
        throw PreconditionError("predicted_component: no component given for "
                                "variable x"
                                + std::to_string(i));
      }
      meet_with(point_components[i]);
    }
    return *gamma;  // a term has at least one leaf
  }

  struct LemmaWitness {
    element_index_type a;      // psi_{alpha,beta}(b)
    element_index_type t_b;    // t(b)
    element_index_type t_a;    // t(a)
    element_index_type delta;  // component of t(b)
    element_index_type gamma;  // component of t(a)
    bool               pass;
  };

  namespace detail {
    inline void check_lemma_preconditions(StrongSemilattice const& sl,
                                          Term const&              t,
                                          element_index_type       alpha,
                                          element_index_type       beta,
                                          element_index_type       b) {
      if (t.arity() > 1) {
        throw PreconditionError("lemma check: term must have at most one "
                                "variable x0");
      }
      if (alpha >= sl.omega().size() || beta >= sl.omega().size()) {
        throw PreconditionError("lemma check: component index not in omega");
      }
      if (!sl.omega().leq(alpha, beta)) {
        throw PreconditionError("lemma check: " + sl.omega().name(alpha)
                                + " <= " + sl.omega().name(beta) + " fails");
      }
      sl.semigroup().validate_index(b);
      if (sl.component_of(b) != beta) {
        throw PreconditionError("lemma check: " + sl.semigroup().name(b)
                                + " is not in component "
                                + sl.omega().name(beta));
      }
    }

    inline void require_constant_from(StrongSemilattice const& sl,
                                      Term const&              t,
                                      element_index_type       alpha) {
      auto const comps = constants_components(t, sl.labeling());
      if (std::find(comps.begin(), comps.end(), alpha) == comps.end()) {
        throw PreconditionError("lemma check: term has no constant from "
                                "component "
                                + sl.omega().name(alpha));
      }
    }

    inline LemmaWitness evaluate_pair(StrongSemilattice const& sl,
                                      Term const&              t,
                                      element_index_type       alpha,
                                      element_index_type       beta,
                                      element_index_type       b) {
      Evaluator const          eval(sl.semigroup());
      LemmaWitness             w{};
      w.a                      = sl.apply_psi(alpha, beta, b);
      element_index_type const pb[] = {b};
      element_index_type const pa[] = {w.a};
      w.t_b                    = eval(t, pb);
      w.t_a                    = eval(t, pa);
      w.delta                  = sl.component_of(w.t_b);
      w.gamma                  = sl.component_of(w.t_a);
      return w;
    }
  }  // namespace detail

  // gamma <= delta and psi_{gamma,delta}(t(b)) = t(a), for a = psi_{alpha,beta}(b).
  inline LemmaWitness check_lemma_hom(StrongSemilattice const& sl,
                                      Term const&              t,
                                      element_index_type       alpha,
                                      element_index_type       beta,
                                      element_index_type       b) {
    detail::check_lemma_preconditions(sl, t, alpha, beta, b);
    auto w = detail::evaluate_pair(sl, t, alpha, beta, b);
    w.pass = sl.omega().leq(w.gamma, w.delta)
             && sl.apply_psi(w.gamma, w.delta, w.t_b) == w.t_a;
    return w;
  }

  // t(b) and t(psi_{alpha,beta}(b)) lie in the same component, when t has a
  // constant from S_alpha.
  inline LemmaWitness check_lemma_same_component(StrongSemilattice const& sl,
                                                 Term const&              t,
                                                 element_index_type       alpha,
                                                 element_index_type       beta,
                                                 element_index_type       b) {
    detail::check_lemma_preconditions(sl, t, alpha, beta, b);
    detail::require_constant_from(sl, t, alpha);
    auto w = detail::evaluate_pair(sl, t, alpha, beta, b);
    w.pass = w.gamma == w.delta;
    return w;
  }

  // t(b) = t(psi_{alpha,beta}(b)), when t has a constant from S_alpha.
  inline LemmaWitness check_lemma_collapse(StrongSemilattice const& sl,
                                           Term const&              t,
                                           element_index_type       alpha,
                                           element_index_type       beta,
                                           element_index_type       b) {
    detail::check_lemma_preconditions(sl, t, alpha, beta, b);
    detail::require_constant_from(sl, t, alpha);
    auto w = detail::evaluate_pair(sl, t, alpha, beta, b);
    w.pass = w.t_b == w.t_a;
    return w;
  }

}  // namespace crsg

#endif  // CRSG_LEMMAS_HPP_
