// crsg - algebraic geometry over finite completely regular semigroups
//
// This file contains the finite semigroup kernel: Cayley tables, the
// associativity check, idempotents, complete regularity and group inverses,
// principal ideals and J-classes, and the (completely) simple predicates.

#ifndef CRSG_SEMIGROUP_HPP_
#define CRSG_SEMIGROUP_HPP_

#include <algorithm>         // for find, any_of
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <tuple>             // for tuple
#include <unordered_map>     // for unordered_map
#include <utility>           // for move
#include <vector>            // for vector

#include "exception.hpp"

namespace crsg {

  using element_index_type = std::uint32_t;

  // Characters that the term grammar and the file formats give meaning to.
  inline constexpr std::string_view reserved_characters = "()'=#";

  inline bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'
             || c == '\v' || reserved_characters.find(c) != std::string_view::npos;
    });
  }

  // A raw n x n table of element indices, not yet known to be associative or
  // even in range. Entry (i, j) is the index of a_i a_j.
  class MultiplicationTable {
   public:
    MultiplicationTable() = default;

    explicit MultiplicationTable(std::size_t n)
        : _n(n), _entries(n * n, 0) {}

    MultiplicationTable(
        std::initializer_list<std::vector<element_index_type>> rows)
        : MultiplicationTable(std::vector<std::vector<element_index_type>>(rows)) {}

    explicit MultiplicationTable(
        std::vector<std::vector<element_index_type>> const& rows)
        : _n(rows.size()), _entries() {
      _entries.reserve(_n * _n);
      for (std::size_t i = 0; i < _n; ++i) {
        if (rows[i].size() != _n) {
          throw MalformedTableError(
              i, rows[i].size(), "row has " + std::to_string(rows[i].size())
                                     + " entries, expected " + std::to_string(_n));
        }
        _entries.insert(_entries.end(), rows[i].begin(), rows[i].end());
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    element_index_type at(std::size_t i, std::size_t j) const noexcept {
      return _entries[i * _n + j];
    }

    element_index_type& at(std::size_t i, std::size_t j) noexcept {
      return _entries[i * _n + j];
    }

    std::span<element_index_type const> entries() const noexcept {
      return _entries;
    }

    bool operator==(MultiplicationTable const&) const = default;

   private:
    std::size_t                     _n = 0;
    std::vector<element_index_type> _entries;
  };

  // Throws MalformedTableError naming the first out-of-range cell.
  inline void check_range(MultiplicationTable const& table) {
    std::size_t const n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table.at(i, j) >= n) {
          throw MalformedTableError(i,
                                    j,
                                    "entry " + std::to_string(table.at(i, j))
                                        + " is not in [0, " + std::to_string(n)
                                        + ")");
        }
      }
    }
  }

  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

  // Every triple (i, j, k) with (a_i a_j) a_k != a_i (a_j a_k), in
  // lexicographic order. Empty iff the table is associative.
  inline std::vector<Triple>
  check_associativity(MultiplicationTable const& table) {
    check_range(table);
    std::size_t const   n = table.size();
    std::vector<Triple> result;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const ij = table.at(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (table.at(ij, k) != table.at(i, table.at(j, k))) {
            result.emplace_back(i, j, k);
          }
        }
      }
    }
    return result;
  }

  // A finite semigroup given by its Cayley table and element names. Immutable
  // once constructed; the constructor enforces every invariant (names valid
  // and distinct, entries in range, associativity).
  class FiniteSemigroup {
   public:
    FiniteSemigroup(std::vector<std::string> names, MultiplicationTable table)
        : _names(std::move(names)), _table(std::move(table)), _index() {
      if (_table.size() == 0) {
        throw MalformedTableError("a semigroup must have at least one element");
      }
      if (_names.size() != _table.size()) {
        throw MalformedTableError("expected " + std::to_string(_table.size())
                                  + " names, found "
                                  + std::to_string(_names.size()));
      }
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (!is_valid_name(_names[i])) {
          throw MalformedTableError("invalid element name \"" + _names[i] + "\"");
        }
        if (!_index.emplace(_names[i], static_cast<element_index_type>(i))
                 .second) {
          throw MalformedTableError("duplicate element name \"" + _names[i]
                                    + "\"");
        }
      }
      auto const bad = check_associativity(_table);
      if (!bad.empty()) {
        auto const [i, j, k] = bad.front();
        throw NotAssociativeError(i, j, k);
      }
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    element_index_type product(element_index_type x,
                               element_index_type y) const noexcept {
      return _table.at(x, y);
    }

    std::string const& name(element_index_type x) const {
      validate_index(x);
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    MultiplicationTable const& table() const noexcept {
      return _table;
    }

    std::optional<element_index_type> index_of(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    void validate_index(element_index_type x) const {
      if (x >= size()) {
        throw PreconditionError("element index " + std::to_string(x)
                                + " out of range for a semigroup of size "
                                + std::to_string(size()));
      }
    }

    // Same table, new labels.
    FiniteSemigroup relabel(std::vector<std::string> names) const {
      return FiniteSemigroup(std::move(names), _table);
    }

    bool operator==(FiniteSemigroup const& that) const {
      return _names == that._names && _table == that._table;
    }

   private:
    std::vector<std::string>                              _names;
    MultiplicationTable                                   _table;
    std::unordered_map<std::string, element_index_type> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Idempotents, periods and group inverses
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<element_index_type> idempotents(FiniteSemigroup const& S) {
    std::vector<element_index_type> result;
    for (element_index_type e = 0; e < S.size(); ++e) {
      if (S.product(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  inline bool is_band(FiniteSemigroup const& S) {
    return idempotents(S).size() == S.size();
  }

  // a^k for k >= 1.
  inline element_index_type
  power(FiniteSemigroup const& S, element_index_type a, std::size_t k) {
    S.validate_index(a);
    if (k == 0) {
      throw PreconditionError("power: exponent must be positive");
    }
    element_index_type result = a;
    for (std::size_t i = 1; i < k; ++i) {
      result = S.product(result, a);
    }
    return result;
  }

  // The least p >= 1 with a^(p+1) = a, if any. Such p exists iff a lies in a
  // subgroup of S, and then p is the order of a in that subgroup.
  inline std::optional<std::size_t> period(FiniteSemigroup const& S,
                                           element_index_type     a) {
    S.validate_index(a);
    element_index_type x = a;  // x = a^(p+1) after p steps
    for (std::size_t p = 1; p <= S.size(); ++p) {
      x = S.product(x, a);
      if (x == a) {
        return p;
      }
    }
    return std::nullopt;
  }

  struct RegularityReport {
    bool completely_regular = true;
    // period[a] is p(a) when a is completely regular, 0 otherwise.
    std::vector<std::size_t>          period;
    std::optional<element_index_type> witness;
  };

  inline RegularityReport is_completely_regular(FiniteSemigroup const& S) {
    RegularityReport report;
    report.period.assign(S.size(), 0);
    for (element_index_type a = 0; a < S.size(); ++a) {
      auto p = period(S, a);
      if (p) {
        report.period[a] = *p;
      } else if (report.completely_regular) {
        report.completely_regular = false;
        report.witness            = a;
      }
    }
    return report;
  }

  // The inverse of a in the maximal subgroup containing a, computed as
  // a^(2p - 1) with p the minimal period.
  inline element_index_type cr_inverse(FiniteSemigroup const& S,
                                       element_index_type     a) {
    auto p = period(S, a);
    if (!p) {
      throw NotCompletelyRegularError(S.name(a));
    }
    return power(S, a, 2 * *p - 1);
  }

  // cr_inverse for every element; throws if S is not completely regular.
  inline std::vector<element_index_type> inverse_table(FiniteSemigroup const& S) {
    std::vector<element_index_type> result(S.size());
    for (element_index_type a = 0; a < S.size(); ++a) {
      result[a] = cr_inverse(S, a);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and J-classes
  ////////////////////////////////////////////////////////////////////////

  // Membership vectors of S^1 a, a S^1 and S^1 a S^1, computed without
  // adjoining an identity.
  inline std::vector<bool> principal_left_ideal(FiniteSemigroup const& S,
                                                element_index_type     a) {
    S.validate_index(a);
    std::vector<bool> result(S.size(), false);
    result[a] = true;
    for (element_index_type s = 0; s < S.size(); ++s) {
      result[S.product(s, a)] = true;
    }
    return result;
  }

  inline std::vector<bool> principal_right_ideal(FiniteSemigroup const& S,
                                                 element_index_type     a) {
    S.validate_index(a);
    std::vector<bool> result(S.size(), false);
    result[a] = true;
    for (element_index_type s = 0; s < S.size(); ++s) {
      result[S.product(a, s)] = true;
    }
    return result;
  }

  inline std::vector<bool> principal_ideal(FiniteSemigroup const& S,
                                           element_index_type     a) {
    auto result = principal_right_ideal(S, a);  // {a} u aS
    for (element_index_type s = 0; s < S.size(); ++s) {
      auto const sa = S.product(s, a);
      result[sa]    = true;
      for (element_index_type t = 0; t < S.size(); ++t) {
        result[S.product(sa, t)] = true;
      }
    }
    return result;
  }

  // The J-classes of S, each sorted, ordered by least element index.
  inline std::vector<std::vector<element_index_type>>
  j_classes(FiniteSemigroup const& S) {
    std::vector<std::vector<bool>> ideals;
    ideals.reserve(S.size());
    for (element_index_type a = 0; a < S.size(); ++a) {
      ideals.push_back(principal_ideal(S, a));
    }
    std::vector<std::vector<element_index_type>> result;
    std::vector<bool>                            placed(S.size(), false);
    for (element_index_type a = 0; a < S.size(); ++a) {
      if (placed[a]) {
        continue;
      }
      result.emplace_back();
      for (element_index_type b = a; b < S.size(); ++b) {
        if (!placed[b] && ideals[b] == ideals[a]) {
          placed[b] = true;
          result.back().push_back(b);
        }
      }
    }
    return result;
  }

  inline bool is_simple(FiniteSemigroup const& S) {
    return j_classes(S).size() == 1;
  }

  namespace detail {
    inline bool is_subset(std::vector<bool> const& x,
                          std::vector<bool> const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] && !y[i]) {
          return false;
        }
      }
      return true;
    }

    // Some principal one-sided ideal containing no strictly smaller one. Every
    // one-sided ideal contains a principal one, so such an ideal is minimal
    // among all one-sided ideals.
    inline std::optional<element_index_type>
    minimal_ideal_generator(std::vector<std::vector<bool>> const& ideals) {
      for (element_index_type a = 0; a < ideals.size(); ++a) {
        bool minimal = true;
        for (element_index_type b = 0; b < ideals.size() && minimal; ++b) {
          if (ideals[b] != ideals[a] && is_subset(ideals[b], ideals[a])) {
            minimal = false;
          }
        }
        if (minimal) {
          return a;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  struct MinimalIdeals {
    std::optional<element_index_type> left_generator;
    std::optional<element_index_type> right_generator;
  };

  inline MinimalIdeals minimal_one_sided_ideals(FiniteSemigroup const& S) {
    std::vector<std::vector<bool>> left, right;
    for (element_index_type a = 0; a < S.size(); ++a) {
      left.push_back(principal_left_ideal(S, a));
      right.push_back(principal_right_ideal(S, a));
    }
    return {detail::minimal_ideal_generator(left),
            detail::minimal_ideal_generator(right)};
  }

  // Simple and possessing minimal left and right ideals. For finite S the
  // second half cannot fail, which is asserted rather than assumed.
  inline bool is_completely_simple(FiniteSemigroup const& S) {
    if (!is_simple(S)) {
      return false;
    }
    auto const minimal = minimal_one_sided_ideals(S);
    if (!minimal.left_generator || !minimal.right_generator) {
      throw std::logic_error(
          "finite simple semigroup without minimal one-sided ideals");
    }
    return true;
  }

  inline std::optional<element_index_type> identity(FiniteSemigroup const& S) {
    for (element_index_type e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (element_index_type x = 0; x < S.size() && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  inline bool is_group(FiniteSemigroup const& S) {
    auto const e = identity(S);
    if (!e) {
      return false;
    }
    for (element_index_type x = 0; x < S.size(); ++x) {
      bool invertible = false;
      for (element_index_type y = 0; y < S.size() && !invertible; ++y) {
        invertible = S.product(x, y) == *e && S.product(y, x) == *e;
      }
      if (!invertible) {
        return false;
      }
    }
    return true;
  }

}  // namespace crsg

#endif  // CRSG_SEMIGROUP_HPP_
