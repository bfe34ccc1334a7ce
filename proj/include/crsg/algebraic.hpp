// crsg - algebraic geometry over finite completely regular semigroups
//
// Solution sets of systems of equations, and the decision procedure for
// algebraicity of a point set Y in S^n.
//
// Y is algebraic iff every point p outside Y violates some equation that holds
// on all of Y, that is, iff there are term functions f, g agreeing on Y with
// f(p) != g(p). decide_algebraic walks the clone and buckets the functions by
// their restriction to Y, keeping the first function of each bucket as its
// representative. A newcomer that differs from its representative at p
// separates p, and the equation (representative = newcomer) is recorded. If
// two functions f, g of one bucket differ at p then at least one of them
// differs from the representative there, so comparing against representatives
// finds every separable point.

#ifndef CRSG_ALGEBRAIC_HPP_
#define CRSG_ALGEBRAIC_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <optional>       // for optional
#include <set>            // for set
#include <stdexcept>      // for logic_error
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "clone.hpp"
#include "exception.hpp"
#include "point-set.hpp"
#include "semigroup.hpp"
#include "term.hpp"

namespace crsg {

  // V_S(system): the points at which both sides of every equation agree.
  inline PointSet solve(FiniteSemigroup const& S, EquationSystem const& system) {
    for (auto const& eq : system.equations) {
      if (eq.lhs.arity() > system.arity || eq.rhs.arity() > system.arity) {
        throw PreconditionError("solve: equation uses a variable beyond the "
                                "declared arity "
                                + std::to_string(system.arity));
      }
      for (auto c : constants(eq.lhs)) {
        S.validate_index(c);
      }
      for (auto c : constants(eq.rhs)) {
        S.validate_index(c);
      }
    }
    Evaluator const eval(S);
    PointSet        result(S.size(), system.arity);
    for (std::uint64_t r = 0; r < result.space(); ++r) {
      auto const p  = result.point(r);
      bool       ok = true;
      for (auto const& eq : system.equations) {
        if (eval(eq.lhs, p) != eval(eq.rhs, p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        result.insert_rank(r);
      }
    }
    return result;
  }

  struct AlgebraicityVerdict {
    enum class Kind { algebraic, not_algebraic, unknown };

    Kind kind;
    // algebraic: a system whose solution set is exactly Y.
    EquationSystem witness;
    // not_algebraic: every point outside Y that no equation valid on Y
    // excludes, in canonical order. The first is the reported stuck point.
    std::vector<Point> stuck_points;
    // Number of clone functions generated.
    std::size_t closure_size = 0;
    // Whether the clone reached its fixed point.
    bool complete = false;

    std::optional<Point> stuck() const {
      if (stuck_points.empty()) {
        return std::nullopt;
      }
      return stuck_points.front();
    }
  };

  inline char const* to_string(AlgebraicityVerdict::Kind kind) {
    switch (kind) {
      case AlgebraicityVerdict::Kind::algebraic:
        return "Algebraic";
      case AlgebraicityVerdict::Kind::not_algebraic:
        return "NotAlgebraic";
      case AlgebraicityVerdict::Kind::unknown:
        return "Unknown";
    }
    return "?";
  }

  // cap bounds the number of clone functions generated. An algebraic verdict's
  // witness is replayed with solve before it is returned.
  inline AlgebraicityVerdict
  decide_algebraic(FiniteSemigroup const& S, PointSet const& Y, std::size_t cap) {
    using Kind = AlgebraicityVerdict::Kind;
    if (Y.degree() != S.size()) {
      throw PreconditionError("decide_algebraic: point set is over a semigroup "
                              "of a different size");
    }
    AlgebraicityVerdict verdict{Kind::algebraic, {Y.arity(), {}}, {}, 0, false};

    auto const outside = Y.complement_ranks();
    if (outside.empty()) {
      return verdict;
    }

    CloneEnumerator clone(S, Y.arity(), cap);
    auto const&     inside = Y.ranks();
    std::vector<bool> separated(outside.size(), false);
    std::size_t       remaining = outside.size();

    std::unordered_map<std::string, std::size_t>  representative;
    std::set<std::pair<std::size_t, std::size_t>> equations;
    std::string                                   key;

    auto visit = [&](std::size_t id) {
      auto const values = clone.values(id);
      key.clear();
      for (auto r : inside) {
        auto const v = values[r];
        key.append(reinterpret_cast<char const*>(&v), sizeof(v));
      }
      auto [it, inserted] = representative.emplace(key, id);
      if (inserted) {
        return true;
      }
      auto const rep = clone.values(it->second);
      for (std::size_t k = 0; k < outside.size(); ++k) {
        if (!separated[k] && values[outside[k]] != rep[outside[k]]) {
          separated[k] = true;
          --remaining;
          equations.emplace(it->second, id);
        }
      }
      return remaining != 0;
    };

    auto const status    = clone.run(visit);
    verdict.closure_size = clone.size();
    verdict.complete     = status == CloneEnumerator::Status::complete;

    if (remaining == 0) {
      for (auto const& [f, g] : equations) {
        verdict.witness.equations.push_back({clone.term(f), clone.term(g)});
      }
      if (!(solve(S, verdict.witness) == Y)) {
        throw std::logic_error("decide_algebraic: witness system does not "
                               "replay to the input set");
      }
      return verdict;
    }
    if (!verdict.complete) {
      verdict.kind = Kind::unknown;
      return verdict;
    }
    verdict.kind = Kind::not_algebraic;
    for (std::size_t k = 0; k < outside.size(); ++k) {
      if (!separated[k]) {
        verdict.stuck_points.push_back(Y.point(outside[k]));
      }
    }
    return verdict;
  }

  inline AlgebraicityVerdict decide_algebraic(FiniteSemigroup const& S,
                                              PointSet const&        Y) {
    return decide_algebraic(S, Y, default_cap(S.size(), Y.arity()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Equational domain probe
  ////////////////////////////////////////////////////////////////////////

  struct EdProbeResult {
    std::vector<AlgebraicityVerdict> inputs;
    // Index of the first input that is not algebraic (a precondition
    // failure), if any; the union is not examined in that case.
    std::optional<std::size_t>         non_algebraic_input;
    std::optional<PointSet>            union_set;
    std::optional<AlgebraicityVerdict> union_verdict;

    // A non-algebraic union of algebraic sets: S is not an equational domain.
    bool certifies_not_ed() const {
      return union_verdict
             && union_verdict->kind == AlgebraicityVerdict::Kind::not_algebraic;
    }
  };

  inline EdProbeResult ed_probe(FiniteSemigroup const&       S,
                                std::vector<PointSet> const& sets,
                                std::size_t                  cap) {
    if (sets.empty()) {
      throw PreconditionError("ed_probe: at least one set is required");
    }
    EdProbeResult result;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      result.inputs.push_back(decide_algebraic(S, sets[i], cap));
      if (result.inputs.back().kind != AlgebraicityVerdict::Kind::algebraic) {
        result.non_algebraic_input = i;
        return result;
      }
    }
    PointSet Y = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
      Y = union_of(Y, sets[i]);
    }
    result.union_verdict = decide_algebraic(S, Y, cap);
    result.union_set     = std::move(Y);
    return result;
  }

}  // namespace crsg

#endif  // CRSG_ALGEBRAIC_HPP_
