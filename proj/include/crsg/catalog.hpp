// crsg - algebraic geometry over finite completely regular semigroups
//
// Small named semigroups and strong semilattice specifications used by the
// tests, the acceptance suite and the sample files.

#ifndef CRSG_CATALOG_HPP_
#define CRSG_CATALOG_HPP_

#include <algorithm>  // for min
#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move, pair
#include <vector>   // for vector

#include "rees.hpp"
#include "semigroup.hpp"
#include "structure.hpp"

namespace crsg::catalog {

  inline FiniteSemigroup trivial(std::string name = "e") {
    return FiniteSemigroup({std::move(name)}, MultiplicationTable{{0}});
  }

  // Z_n written multiplicatively: e, g, g2, ..., g<n-1>.
  inline FiniteSemigroup cyclic_group(std::size_t n, std::string const& g = "g") {
    std::vector<std::string> names{"e"};
    for (std::size_t k = 1; k < n; ++k) {
      names.push_back(k == 1 ? g : g + std::to_string(k));
    }
    MultiplicationTable table(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table.at(i, j) = static_cast<element_index_type>((i + j) % n);
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  // {e, a}
  inline FiniteSemigroup z2() {
    return cyclic_group(2, "a");
  }

  // {e, g, g2}
  inline FiniteSemigroup z3() {
    return cyclic_group(3, "g");
  }

  // xy = x
  inline FiniteSemigroup left_zero(std::size_t n) {
    std::vector<std::string> names;
    MultiplicationTable      table(n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("l" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table.at(i, j) = static_cast<element_index_type>(i);
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  // xy = y
  inline FiniteSemigroup right_zero(std::size_t n) {
    std::vector<std::string> names;
    MultiplicationTable      table(n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("r" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table.at(i, j) = static_cast<element_index_type>(j);
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  // M(1; I, L; P) with every sandwich entry the identity.
  inline FiniteSemigroup rectangular_band(std::size_t i_count,
                                          std::size_t lambda_count) {
    return build_rees_matrix(
        trivial(),
        i_count,
        lambda_count,
        std::vector<std::vector<element_index_type>>(
            lambda_count, std::vector<element_index_type>(i_count, 0)));
  }

  // The 2-element left zero semigroup as a Rees matrix semigroup.
  inline FiniteSemigroup rees_left_zero2() {
    return rectangular_band(2, 1);
  }

  // {0, a} with every product 0; not completely regular.
  inline FiniteSemigroup null2() {
    return FiniteSemigroup({"0", "a"}, MultiplicationTable{{0, 0}, {0, 0}});
  }

  // The chain 0 < 1 < ... < k-1 under min.
  inline FiniteSemigroup chain(std::size_t k) {
    std::vector<std::string> names;
    MultiplicationTable      table(k);
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(std::to_string(i));
      for (std::size_t j = 0; j < k; ++j) {
        table.at(i, j) = static_cast<element_index_type>(std::min(i, j));
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

  // The two element semilattice listed top first: top > bot.
  inline FiniteSemigroup top_bot() {
    return FiniteSemigroup({"top", "bot"}, MultiplicationTable{{0, 1}, {1, 1}});
  }

  // bot < a, b < top with ab = bot; elements listed bot, a, b, top.
  inline FiniteSemigroup diamond() {
    return FiniteSemigroup({"bot", "a", "b", "top"},
                           MultiplicationTable{{0, 0, 0, 0},
                                               {0, 1, 0, 1},
                                               {0, 0, 2, 2},
                                               {0, 1, 2, 3}});
  }

  inline StructureMap constant_map(std::size_t domain, element_index_type value) {
    return StructureMap(domain, value);
  }

  // Omega = top > bot with S_top above S_bot and psi_{bot,top} = map.
  inline StrongSemilatticeSpec two_level(FiniteSemigroup top,
                                         FiniteSemigroup bottom,
                                         StructureMap    map) {
    StrongSemilatticeSpec spec{top_bot(), {std::move(top), std::move(bottom)}, {}};
    spec.maps.emplace(std::make_pair(element_index_type(1), element_index_type(0)),
                      std::move(map));
    return spec;
  }

  // Z2 = {e, a} above the trivial group {f}: the 3-element semigroup T3.
  inline StrongSemilatticeSpec t3_spec() {
    return two_level(z2(), trivial("f"), constant_map(2, 0));
  }

  // T3 with its elements named e, a, f (in that order).
  inline StrongSemilattice t3() {
    auto built = build_strong_semilattice(t3_spec());
    return StrongSemilattice(built.spec(),
                             built.semigroup().relabel({"e", "a", "f"}),
                             built.labeling());
  }

  struct NamedSpec {
    std::string           name;
    StrongSemilatticeSpec spec;
  };

  // Two-component specs whose components are drawn from the trivial group,
  // Z2, Z3, the 2-element left zero semigroup and the 2x2 rectangular band,
  // all of size at most 6.
  inline std::vector<NamedSpec> two_level_specs() {
    auto const lz2  = rees_left_zero2();   // 0:e:0, 1:e:0
    auto const rb22 = rectangular_band(2, 2);  // i:e:l at index 2i + l
    std::vector<NamedSpec> result;
    result.push_back({"Z2/1 (T3)", t3_spec()});
    result.push_back({"1/1", two_level(trivial(), trivial(), {0})});
    result.push_back({"Z2/Z2 id", two_level(z2(), z2(), identity_map(2))});
    result.push_back({"Z3/Z3 id", two_level(z3(), z3(), identity_map(3))});
    result.push_back({"Z3/1", two_level(z3(), trivial(), constant_map(3, 0))});
    result.push_back({"1/Z3", two_level(trivial(), z3(), {0})});
    result.push_back({"Z2/Z3", two_level(z2(), z3(), constant_map(2, 0))});
    result.push_back({"LZ2/LZ2 id", two_level(lz2, lz2, identity_map(2))});
    result.push_back({"RB22/LZ2", two_level(rb22, lz2, {0, 0, 1, 1})});
    result.push_back({"Z3/LZ2", two_level(z3(), lz2, constant_map(3, 1))});
    result.push_back({"RB22/1", two_level(rb22, trivial(), constant_map(4, 0))});
    result.push_back({"1/RB22", two_level(trivial(), rb22, {3})});
    result.push_back({"LZ2/Z2", two_level(lz2, z2(), constant_map(2, 0))});
    result.push_back({"Z2/LZ2", two_level(z2(), lz2, constant_map(2, 0))});
    return result;
  }

  // Z3 > Z3 > 1 on the 3-chain (elements listed bottom first).
  inline StrongSemilatticeSpec three_chain_spec() {
    StrongSemilatticeSpec spec{chain(3), {trivial("f"), z3(), z3()}, {}};
    spec.maps.emplace(std::make_pair(element_index_type(1), element_index_type(2)),
                      identity_map(3));
    spec.maps.emplace(std::make_pair(element_index_type(0), element_index_type(1)),
                      constant_map(3, 0));
    spec.maps.emplace(std::make_pair(element_index_type(0), element_index_type(2)),
                      constant_map(3, 0));
    return spec;
  }

  // bot = 1, a = Z3, b = LZ2, top = Z3 with psi_{a,top} = id and
  // psi_{b,top} constant.
  inline StrongSemilatticeSpec diamond_spec() {
    StrongSemilatticeSpec spec{
        diamond(), {trivial("f"), z3(), rees_left_zero2(), z3()}, {}};
    auto key = [](element_index_type x, element_index_type y) {
      return std::make_pair(x, y);
    };
    spec.maps.emplace(key(0, 1), constant_map(3, 0));
    spec.maps.emplace(key(0, 2), constant_map(2, 0));
    spec.maps.emplace(key(0, 3), constant_map(3, 0));
    spec.maps.emplace(key(1, 3), identity_map(3));
    spec.maps.emplace(key(2, 3), constant_map(3, 1));
    return spec;
  }

  // Everything above plus single-component specs.
  inline std::vector<NamedSpec> all_specs() {
    auto result = two_level_specs();
    result.push_back({"3-chain Z3/Z3/1", three_chain_spec()});
    result.push_back({"diamond", diamond_spec()});
    result.push_back({"Z3 alone", StrongSemilatticeSpec{trivial("w"), {z3()}, {}}});
    result.push_back(
        {"RB22 alone", StrongSemilatticeSpec{trivial("w"), {rectangular_band(2, 2)}, {}}});
    return result;
  }

}  // namespace crsg::catalog

#endif  // CRSG_CATALOG_HPP_
