// crsg - algebraic geometry over finite completely regular semigroups
//
// Rees matrix semigroups M(G; I, L; P) over a finite group G.

#ifndef CRSG_REES_HPP_
#define CRSG_REES_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string, to_string
#include <vector>   // for vector

#include "exception.hpp"
#include "semigroup.hpp"

namespace crsg {

  // Elements are the triples (i, g, l) named "i:g:l", ordered
  // lexicographically; (i, g, l)(j, h, m) = (i, g p[l][j] h, m).
  // sandwich has lambda_count rows and i_count columns.
  inline FiniteSemigroup build_rees_matrix(
      FiniteSemigroup const&                               G,
      std::size_t                                          i_count,
      std::size_t                                          lambda_count,
      std::vector<std::vector<element_index_type>> const& sandwich) {
    if (!is_group(G)) {
      throw PreconditionError("build_rees_matrix: the base semigroup is not a group");
    }
    if (i_count == 0 || lambda_count == 0) {
      throw PreconditionError("build_rees_matrix: index sets must be nonempty");
    }
    if (sandwich.size() != lambda_count) {
      throw PreconditionError("build_rees_matrix: sandwich matrix must have "
                              + std::to_string(lambda_count) + " rows");
    }
    for (auto const& row : sandwich) {
      if (row.size() != i_count) {
        throw PreconditionError("build_rees_matrix: sandwich matrix must have "
                                + std::to_string(i_count) + " columns");
      }
      for (auto g : row) {
        G.validate_index(g);
      }
    }

    std::size_t const g_count = G.size();
    auto index = [&](std::size_t i, std::size_t g, std::size_t l) {
      return static_cast<element_index_type>((i * g_count + g) * lambda_count
                                             + l);
    };

    std::size_t const        n = i_count * g_count * lambda_count;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < i_count; ++i) {
      for (element_index_type g = 0; g < g_count; ++g) {
        for (std::size_t l = 0; l < lambda_count; ++l) {
          names[index(i, g, l)]
              = std::to_string(i) + ":" + G.name(g) + ":" + std::to_string(l);
        }
      }
    }

    MultiplicationTable table(n);
    for (std::size_t i = 0; i < i_count; ++i) {
      for (element_index_type g = 0; g < g_count; ++g) {
        for (std::size_t l = 0; l < lambda_count; ++l) {
          for (std::size_t j = 0; j < i_count; ++j) {
            auto const gp = G.product(g, sandwich[l][j]);
            for (element_index_type h = 0; h < g_count; ++h) {
              for (std::size_t m = 0; m < lambda_count; ++m) {
                table.at(index(i, g, l), index(j, h, m))
                    = index(i, G.product(gp, h), m);
              }
            }
          }
        }
      }
    }
    return FiniteSemigroup(std::move(names), std::move(table));
  }

}  // namespace crsg

#endif  // CRSG_REES_HPP_
