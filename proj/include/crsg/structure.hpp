// crsg - algebraic geometry over finite completely regular semigroups
//
// This file contains semilattices, strong semilattices of semigroups (a
// semilattice Omega, a component S_alpha for every alpha, and structure
// homomorphisms psi_{alpha,beta}: S_beta -> S_alpha for alpha <= beta), the
// construction of the semigroup they define, and the reverse decomposition of
// a completely regular Cayley table into such data.
//
// Multiplication in the strong semilattice: for s1 in S_alpha, s2 in S_beta
//
//   s1 s2 = psi_{ab,alpha}(s1) psi_{ab,beta}(s2),   ab = alpha beta (meet).

#ifndef CRSG_STRUCTURE_HPP_
#define CRSG_STRUCTURE_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <numeric>   // for iota
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair, move
#include <vector>    // for vector

#include "exception.hpp"
#include "semigroup.hpp"

namespace crsg {

  ////////////////////////////////////////////////////////////////////////
  // Semilattices
  ////////////////////////////////////////////////////////////////////////

  inline bool is_semilattice(FiniteSemigroup const& S) {
    for (element_index_type x = 0; x < S.size(); ++x) {
      if (S.product(x, x) != x) {
        return false;
      }
      for (element_index_type y = x + 1; y < S.size(); ++y) {
        if (S.product(x, y) != S.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  // A commutative idempotent semigroup, ordered by x <= y iff xy = x.
  class Semilattice {
   public:
    explicit Semilattice(FiniteSemigroup carrier) : _carrier(std::move(carrier)) {
      if (!is_semilattice(_carrier)) {
        throw PreconditionError("not a semilattice (xy = yx and xx = x must hold)");
      }
    }

    std::size_t size() const noexcept {
      return _carrier.size();
    }

    element_index_type meet(element_index_type x, element_index_type y) const {
      return _carrier.product(x, y);
    }

    bool leq(element_index_type x, element_index_type y) const {
      return _carrier.product(x, y) == x;
    }

    bool less(element_index_type x, element_index_type y) const {
      return x != y && leq(x, y);
    }

    FiniteSemigroup const& carrier() const noexcept {
      return _carrier;
    }

    std::string const& name(element_index_type x) const {
      return _carrier.name(x);
    }

   private:
    FiniteSemigroup _carrier;
  };

  // All pairs (x, y) with x <= y, in lexicographic order.
  inline std::vector<std::pair<element_index_type, element_index_type>>
  semilattice_order(Semilattice const& omega) {
    std::vector<std::pair<element_index_type, element_index_type>> result;
    for (element_index_type x = 0; x < omega.size(); ++x) {
      for (element_index_type y = 0; y < omega.size(); ++y) {
        if (omega.leq(x, y)) {
          result.emplace_back(x, y);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong semilattice specifications
  ////////////////////////////////////////////////////////////////////////

  // psi[b] is the image in S_alpha (a local index) of b in S_beta.
  using StructureMap = std::vector<element_index_type>;

  struct StrongSemilatticeSpec {
    FiniteSemigroup              omega;
    std::vector<FiniteSemigroup> components;
    // Keyed by (alpha, beta) with alpha <= beta. Identity maps psi_{a,a} may be
    // omitted; if present they are validated like any other map.
    std::map<std::pair<element_index_type, element_index_type>, StructureMap>
        maps;

    bool operator==(StrongSemilatticeSpec const&) const = default;
  };

  inline StructureMap identity_map(std::size_t n) {
    StructureMap result(n);
    std::iota(result.begin(), result.end(), element_index_type(0));
    return result;
  }

  // psi_{alpha,beta}; the identity when alpha == beta and no map is stored.
  inline StructureMap psi(StrongSemilatticeSpec const& spec,
                          element_index_type           alpha,
                          element_index_type           beta) {
    auto it = spec.maps.find({alpha, beta});
    if (it != spec.maps.end()) {
      return it->second;
    }
    if (alpha == beta) {
      return identity_map(spec.components.at(alpha).size());
    }
    throw PreconditionError("no structure map psi_{" + spec.omega.name(alpha)
                            + "," + spec.omega.name(beta) + "}");
  }

  enum class ViolationKind {
    omega_not_semilattice,
    component_count,
    component_not_completely_regular,
    map_for_incomparable_pair,
    missing_map,
    map_not_total,
    map_out_of_range,
    condition_identity,     // psi_{a,a} is the identity
    condition_composition,  // psi_{a,b} o psi_{b,c} = psi_{a,c}
    condition_square,       // psi_{cb,c} o psi_{c,a} = psi_{cb,b} o psi_{b,a}
    not_homomorphism
  };

  struct Violation {
    ViolationKind kind;
    std::string   message;
  };

  struct ValidationReport {
    std::vector<Violation> violations;
    // Per component; only filled when the components could be inspected.
    std::vector<bool> completely_simple;

    bool ok() const noexcept {
      return violations.empty();
    }

    std::string to_string() const {
      std::string out;
      for (auto const& v : violations) {
        out += "violation: " + v.message + "\n";
      }
      return out;
    }
  };

  namespace detail {
    inline std::string map_name(StrongSemilatticeSpec const& spec,
                                element_index_type           alpha,
                                element_index_type           beta) {
      return "psi_{" + spec.omega.name(alpha) + "," + spec.omega.name(beta) + "}";
    }

    inline std::string element_name(StrongSemilatticeSpec const& spec,
                                    element_index_type           alpha,
                                    element_index_type           x) {
      return spec.omega.name(alpha) + ":" + spec.components[alpha].name(x);
    }
  }  // namespace detail

  // Reports every violated invariant with witnesses. Structural problems
  // (Omega not a semilattice, wrong component count, malformed maps) stop the
  // validation before the conditions on the maps are evaluated.
  inline ValidationReport validate_spec(StrongSemilatticeSpec const& spec) {
    using detail::element_name;
    using detail::map_name;
    ValidationReport report;
    auto             add = [&report](ViolationKind k, std::string msg) {
      report.violations.push_back({k, std::move(msg)});
    };

    if (!is_semilattice(spec.omega)) {
      add(ViolationKind::omega_not_semilattice, "omega is not a semilattice");
      return report;
    }
    Semilattice const omega(spec.omega);
    std::size_t const k = omega.size();
    if (spec.components.size() != k) {
      add(ViolationKind::component_count,
          "expected " + std::to_string(k) + " components, found "
              + std::to_string(spec.components.size()));
      return report;
    }

    for (element_index_type a = 0; a < k; ++a) {
      auto const& S  = spec.components[a];
      auto const  cr = is_completely_regular(S);
      if (!cr.completely_regular) {
        add(ViolationKind::component_not_completely_regular,
            "component " + omega.name(a) + " is not completely regular (element "
                + S.name(*cr.witness) + ")");
        report.completely_simple.push_back(false);
      } else {
        report.completely_simple.push_back(is_completely_simple(S));
      }
    }

    for (auto const& [key, map] : spec.maps) {
      auto const [a, b] = key;
      if (a >= k || b >= k) {
        add(ViolationKind::map_for_incomparable_pair,
            "map with an index outside omega");
        continue;
      }
      if (!omega.leq(a, b)) {
        add(ViolationKind::map_for_incomparable_pair,
            map_name(spec, a, b) + " given but " + omega.name(a)
                + " <= " + omega.name(b) + " fails");
        continue;
      }
      if (map.size() != spec.components[b].size()) {
        add(ViolationKind::map_not_total,
            map_name(spec, a, b) + " has " + std::to_string(map.size())
                + " entries, expected " + std::to_string(spec.components[b].size()));
        continue;
      }
      for (element_index_type x = 0; x < map.size(); ++x) {
        if (map[x] >= spec.components[a].size()) {
          add(ViolationKind::map_out_of_range,
              map_name(spec, a, b) + " sends " + element_name(spec, b, x)
                  + " outside " + omega.name(a));
        }
      }
    }
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        if (a != b && omega.leq(a, b) && !spec.maps.contains({a, b})) {
          add(ViolationKind::missing_map, map_name(spec, a, b) + " is missing");
        }
      }
    }
    if (!report.ok()) {
      return report;
    }

    // All maps are now well formed; psi() cannot throw for comparable pairs.
    std::map<std::pair<element_index_type, element_index_type>, StructureMap>
        maps;
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        if (omega.leq(a, b)) {
          maps.emplace(std::make_pair(a, b), psi(spec, a, b));
        }
      }
    }

    for (element_index_type a = 0; a < k; ++a) {
      auto const& m = maps.at({a, a});
      for (element_index_type x = 0; x < m.size(); ++x) {
        if (m[x] != x) {
          add(ViolationKind::condition_identity,
              map_name(spec, a, a) + " sends " + element_name(spec, a, x)
                  + " to " + element_name(spec, a, m[x]));
        }
      }
    }

    for (auto const& [key, m] : maps) {
      auto const [a, b] = key;
      auto const& Sa    = spec.components[a];
      auto const& Sb    = spec.components[b];
      for (element_index_type x = 0; x < Sb.size(); ++x) {
        for (element_index_type y = 0; y < Sb.size(); ++y) {
          if (m[Sb.product(x, y)] != Sa.product(m[x], m[y])) {
            add(ViolationKind::not_homomorphism,
                map_name(spec, a, b) + " is not a homomorphism at ("
                    + element_name(spec, b, x) + ", " + element_name(spec, b, y)
                    + ")");
          }
        }
      }
    }

    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        for (element_index_type c = 0; c < k; ++c) {
          if (!omega.leq(a, b) || !omega.leq(b, c)) {
            continue;
          }
          auto const& ab = maps.at({a, b});
          auto const& bc = maps.at({b, c});
          auto const& ac = maps.at({a, c});
          for (element_index_type x = 0; x < ac.size(); ++x) {
            if (ab[bc[x]] != ac[x]) {
              add(ViolationKind::condition_composition,
                  map_name(spec, a, b) + " o " + map_name(spec, b, c)
                      + " != " + map_name(spec, a, c) + " at "
                      + element_name(spec, c, x));
            }
          }
        }
      }
    }

    // Implied by the composition condition; checked independently anyway.
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        for (element_index_type c = 0; c < k; ++c) {
          if (!omega.leq(b, a) || !omega.leq(c, a)) {
            continue;
          }
          auto const  cb  = omega.meet(c, b);
          auto const& lhs = maps.at({cb, c});
          auto const& ca  = maps.at({c, a});
          auto const& rhs = maps.at({cb, b});
          auto const& ba  = maps.at({b, a});
          for (element_index_type x = 0; x < spec.components[a].size(); ++x) {
            if (lhs[ca[x]] != rhs[ba[x]]) {
              add(ViolationKind::condition_square,
                  map_name(spec, cb, c) + " o " + map_name(spec, c, a) + " != "
                      + map_name(spec, cb, b) + " o " + map_name(spec, b, a)
                      + " at " + element_name(spec, a, x));
            }
          }
        }
      }
    }
    return report;
  }

  class InvalidSpecError : public Error {
   public:
    explicit InvalidSpecError(ValidationReport report)
        : Error("invalid strong semilattice specification:\n"
                + report.to_string()),
          _report(std::move(report)) {}

    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  ////////////////////////////////////////////////////////////////////////
  // Building
  ////////////////////////////////////////////////////////////////////////

  // Which component each element of a built semigroup lies in, and where.
  struct Labeling {
    std::vector<element_index_type> component;  // per element
    std::vector<element_index_type> local;      // per element
    std::vector<element_index_type> offset;     // per component

    std::size_t size() const noexcept {
      return component.size();
    }

    element_index_type element(element_index_type alpha,
                               element_index_type local_index) const {
      return offset.at(alpha) + local_index;
    }

    bool operator==(Labeling const&) const = default;
  };

  inline element_index_type component_of(Labeling const&    labeling,
                                         element_index_type s) {
    if (s >= labeling.size()) {
      throw PreconditionError("component_of: unknown element "
                              + std::to_string(s));
    }
    return labeling.component[s];
  }

  // The semigroup defined by a validated spec, bundled with its data.
  class StrongSemilattice {
   public:
    StrongSemilattice(StrongSemilatticeSpec spec,
                      FiniteSemigroup       semigroup,
                      Labeling              labeling)
        : _spec(std::move(spec)),
          _omega(_spec.omega),
          _semigroup(std::move(semigroup)),
          _labeling(std::move(labeling)),
          _maps() {
      for (element_index_type a = 0; a < _omega.size(); ++a) {
        for (element_index_type b = 0; b < _omega.size(); ++b) {
          if (_omega.leq(a, b)) {
            _maps.emplace(std::make_pair(a, b), psi(_spec, a, b));
          }
        }
      }
    }

    StrongSemilatticeSpec const& spec() const noexcept {
      return _spec;
    }
    Semilattice const& omega() const noexcept {
      return _omega;
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    Labeling const& labeling() const noexcept {
      return _labeling;
    }

    element_index_type component_of(element_index_type s) const {
      return crsg::component_of(_labeling, s);
    }

    // psi_{alpha,beta} applied to an element s of S_beta, both as indices in
    // the built semigroup.
    element_index_type apply_psi(element_index_type alpha,
                                 element_index_type beta,
                                 element_index_type s) const {
      if (component_of(s) != beta) {
        throw PreconditionError("apply_psi: " + _semigroup.name(s)
                                + " is not in component " + _omega.name(beta));
      }
      auto it = _maps.find({alpha, beta});
      if (it == _maps.end()) {
        throw PreconditionError("apply_psi: " + _omega.name(alpha)
                                + " <= " + _omega.name(beta) + " fails");
      }
      return _labeling.element(alpha, it->second[_labeling.local[s]]);
    }

    std::vector<element_index_type> elements_of(element_index_type alpha) const {
      std::vector<element_index_type> result(_spec.components.at(alpha).size());
      std::iota(result.begin(), result.end(), _labeling.offset[alpha]);
      return result;
    }

   private:
    StrongSemilatticeSpec _spec;
    Semilattice           _omega;
    FiniteSemigroup       _semigroup;
    Labeling              _labeling;
    std::map<std::pair<element_index_type, element_index_type>, StructureMap>
        _maps;
  };

  // Elements are the disjoint union of the components in the order of Omega,
  // named "<alpha>:<local name>". Throws InvalidSpecError if validation fails.
  inline StrongSemilattice build_strong_semilattice(StrongSemilatticeSpec spec) {
    auto report = validate_spec(spec);
    if (!report.ok()) {
      throw InvalidSpecError(std::move(report));
    }
    Semilattice const omega(spec.omega);
    std::size_t const k = omega.size();

    Labeling                 labeling;
    std::vector<std::string> names;
    for (element_index_type a = 0; a < k; ++a) {
      labeling.offset.push_back(static_cast<element_index_type>(names.size()));
      auto const& S = spec.components[a];
      for (element_index_type x = 0; x < S.size(); ++x) {
        labeling.component.push_back(a);
        labeling.local.push_back(x);
        names.push_back(omega.name(a) + ":" + S.name(x));
      }
    }

    std::size_t const   n = names.size();
    MultiplicationTable table(n);
    for (element_index_type s = 0; s < n; ++s) {
      auto const a = labeling.component[s];
      for (element_index_type t = 0; t < n; ++t) {
        auto const b  = labeling.component[t];
        auto const ab = omega.meet(a, b);
        auto const x  = psi(spec, ab, a)[labeling.local[s]];
        auto const y  = psi(spec, ab, b)[labeling.local[t]];
        table.at(s, t)
            = labeling.element(ab, spec.components[ab].product(x, y));
      }
    }
    FiniteSemigroup S(std::move(names), std::move(table));
    return StrongSemilattice(std::move(spec), std::move(S), std::move(labeling));
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  enum class DecompositionFailureKind {
    quotient_ill_defined,
    quotient_not_semilattice,
    no_strong_structure,
    eq1_mismatch
  };

  inline char const* to_string(DecompositionFailureKind kind) {
    switch (kind) {
      case DecompositionFailureKind::quotient_ill_defined:
        return "quotient ill-defined";
      case DecompositionFailureKind::quotient_not_semilattice:
        return "quotient not a semilattice";
      case DecompositionFailureKind::no_strong_structure:
        return "no strong structure";
      case DecompositionFailureKind::eq1_mismatch:
        return "product rule mismatch";
    }
    return "unknown";
  }

  struct DecompositionFailure {
    DecompositionFailureKind kind;
    std::string              message;
  };

  struct Decomposition {
    StrongSemilatticeSpec spec;
    // The induced labeling of the input's elements: element s of the input is
    // local element labeling.local[s] of component labeling.component[s].
    // The offsets are left empty, the classes need not be contiguous.
    Labeling labeling;
  };

  struct DecomposeResult {
    std::optional<Decomposition>        decomposition;
    std::optional<DecompositionFailure> failure;

    explicit operator bool() const noexcept {
      return decomposition.has_value();
    }
  };

  namespace detail {
    inline DecomposeResult fail(DecompositionFailureKind kind, std::string msg) {
      return {std::nullopt, DecompositionFailure{kind, std::move(msg)}};
    }

    // If every name in a class is "<prefix>:<rest>" with one prefix per class,
    // distinct across classes, reuse the prefixes and the rests; this inverts
    // the naming of build_strong_semilattice.
    inline bool split_names(
        FiniteSemigroup const&                              S,
        std::vector<std::vector<element_index_type>> const& classes,
        std::vector<std::string>&                           omega_names,
        std::vector<std::vector<std::string>>&              local_names) {
      omega_names.clear();
      local_names.clear();
      for (auto const& cls : classes) {
        std::optional<std::string> prefix;
        local_names.emplace_back();
        for (auto s : cls) {
          auto const& name = S.name(s);
          auto const  pos  = name.find(':');
          if (pos == std::string::npos || pos == 0 || pos + 1 == name.size()) {
            return false;
          }
          auto p = name.substr(0, pos);
          if (prefix && *prefix != p) {
            return false;
          }
          prefix = p;
          local_names.back().push_back(name.substr(pos + 1));
        }
        if (std::find(omega_names.begin(), omega_names.end(), *prefix)
            != omega_names.end()) {
          return false;
        }
        omega_names.push_back(*prefix);
      }
      return true;
    }
  }  // namespace detail

  // Components are the J-classes (ordered by least element), Omega is the
  // quotient, and psi_{alpha,beta}(b) is the unique c in S_alpha with ab = ac
  // and ba = ca for all a in S_alpha. The product rule is then replayed against
  // the input. Throws NotCompletelyRegularError if S is not completely regular.
  inline DecomposeResult decompose(FiniteSemigroup const& S) {
    using detail::fail;
    auto const cr = is_completely_regular(S);
    if (!cr.completely_regular) {
      throw NotCompletelyRegularError(S.name(*cr.witness));
    }

    auto const        classes = j_classes(S);
    std::size_t const k       = classes.size();
    Labeling          labeling;
    labeling.component.resize(S.size());
    labeling.local.resize(S.size());
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type x = 0; x < classes[a].size(); ++x) {
        labeling.component[classes[a][x]] = a;
        labeling.local[classes[a][x]]     = x;
      }
    }

    std::vector<std::string>              omega_names;
    std::vector<std::vector<std::string>> local_names;
    if (!detail::split_names(S, classes, omega_names, local_names)) {
      omega_names.clear();
      local_names.clear();
      for (element_index_type a = 0; a < k; ++a) {
        omega_names.push_back("J" + std::to_string(a));
        local_names.emplace_back();
        for (auto s : classes[a]) {
          local_names.back().push_back(S.name(s));
        }
      }
    }

    // Quotient table: one representative per pair, then verified over all.
    MultiplicationTable quotient(k);
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        auto const c = labeling.component[S.product(classes[a][0], classes[b][0])];
        quotient.at(a, b) = c;
        for (auto s : classes[a]) {
          for (auto t : classes[b]) {
            if (labeling.component[S.product(s, t)] != c) {
              return fail(DecompositionFailureKind::quotient_ill_defined,
                          "the class of " + S.name(s) + " " + S.name(t)
                              + " differs from the class of "
                              + S.name(classes[a][0]) + " "
                              + S.name(classes[b][0]));
            }
          }
        }
      }
    }
    FiniteSemigroup omega(omega_names, quotient);
    if (!is_semilattice(omega)) {
      return fail(DecompositionFailureKind::quotient_not_semilattice,
                  "the quotient by J-classes is not a semilattice");
    }

    StrongSemilatticeSpec spec{omega, {}, {}};
    for (element_index_type a = 0; a < k; ++a) {
      auto const&         cls = classes[a];
      MultiplicationTable table(cls.size());
      for (element_index_type x = 0; x < cls.size(); ++x) {
        for (element_index_type y = 0; y < cls.size(); ++y) {
          table.at(x, y) = labeling.local[S.product(cls[x], cls[y])];
        }
      }
      spec.components.emplace_back(local_names[a], std::move(table));
    }

    Semilattice const lattice(omega);
    for (element_index_type a = 0; a < k; ++a) {
      for (element_index_type b = 0; b < k; ++b) {
        if (!lattice.less(a, b)) {
          continue;
        }
        StructureMap map;
        for (auto s : classes[b]) {
          std::optional<element_index_type> image;
          for (auto c : classes[a]) {
            bool agrees = true;
            for (auto x : classes[a]) {
              if (S.product(x, s) != S.product(x, c)
                  || S.product(s, x) != S.product(c, x)) {
                agrees = false;
                break;
              }
            }
            if (agrees) {
              if (image) {
                return fail(DecompositionFailureKind::no_strong_structure,
                            "image of " + S.name(s) + " in class "
                                + omega.name(a) + " is not unique");
              }
              image = labeling.local[c];
            }
          }
          if (!image) {
            return fail(DecompositionFailureKind::no_strong_structure,
                        "no image of " + S.name(s) + " in class "
                            + omega.name(a));
          }
          map.push_back(*image);
        }
        spec.maps.emplace(std::make_pair(a, b), std::move(map));
      }
    }

    auto const report = validate_spec(spec);
    if (!report.ok()) {
      return fail(DecompositionFailureKind::no_strong_structure,
                  "recovered maps are invalid:\n" + report.to_string());
    }

    for (element_index_type s = 0; s < S.size(); ++s) {
      auto const a = labeling.component[s];
      for (element_index_type t = 0; t < S.size(); ++t) {
        auto const b  = labeling.component[t];
        auto const ab = lattice.meet(a, b);
        auto const x  = psi(spec, ab, a)[labeling.local[s]];
        auto const y  = psi(spec, ab, b)[labeling.local[t]];
        auto const st = classes[ab][spec.components[ab].product(x, y)];
        if (st != S.product(s, t)) {
          return fail(DecompositionFailureKind::eq1_mismatch,
                      "product " + S.name(s) + " " + S.name(t) + " is "
                          + S.name(S.product(s, t))
                          + " but the structure maps give " + S.name(st));
        }
      }
    }
    return {Decomposition{std::move(spec), std::move(labeling)}, std::nullopt};
  }

}  // namespace crsg

#endif  // CRSG_STRUCTURE_HPP_
