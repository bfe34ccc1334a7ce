// crsg - algebraic geometry over finite completely regular semigroups
//
// Finite subsets of S^n. Points are stored by their rank in the lexicographic
// enumeration of S^n (first coordinate most significant), which is also the
// canonical order used for output.

#ifndef CRSG_POINT_SET_HPP_
#define CRSG_POINT_SET_HPP_

#include <algorithm>  // for lower_bound, set_union, set_intersection
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <iterator>   // for back_inserter
#include <limits>     // for numeric_limits
#include <span>       // for span
#include <string>     // for string
#include <vector>     // for vector

#include "exception.hpp"
#include "semigroup.hpp"

namespace crsg {

  using Point = std::vector<element_index_type>;

  // |S|^n, throwing if it does not fit comfortably in 64 bits.
  inline std::uint64_t space_size(std::size_t degree, std::size_t arity) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (result > (std::numeric_limits<std::uint64_t>::max() >> 1) / degree) {
        throw PreconditionError("S^n is too large to enumerate");
      }
      result *= degree;
    }
    return result;
  }

  inline std::uint64_t rank_of(std::span<element_index_type const> point,
                               std::size_t                          degree) {
    std::uint64_t r = 0;
    for (auto x : point) {
      r = r * degree + x;
    }
    return r;
  }

  inline Point unrank(std::uint64_t r, std::size_t degree, std::size_t arity) {
    Point p(arity);
    for (std::size_t i = arity; i-- > 0;) {
      p[i] = static_cast<element_index_type>(r % degree);
      r /= degree;
    }
    return p;
  }

  class PointSet {
   public:
    PointSet(std::size_t degree, std::size_t arity)
        : _degree(degree), _arity(arity), _space(space_size(degree, arity)) {
      if (degree == 0) {
        throw PreconditionError("PointSet: the semigroup must be nonempty");
      }
    }

    static PointSet all(std::size_t degree, std::size_t arity) {
      PointSet result(degree, arity);
      result._ranks.resize(result._space);
      for (std::uint64_t r = 0; r < result._space; ++r) {
        result._ranks[r] = r;
      }
      return result;
    }

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t arity() const noexcept {
      return _arity;
    }
    std::uint64_t space() const noexcept {
      return _space;
    }
    std::size_t size() const noexcept {
      return _ranks.size();
    }
    bool empty() const noexcept {
      return _ranks.empty();
    }

    void insert(std::span<element_index_type const> p) {
      insert_rank(rank(p));
    }

    void insert_rank(std::uint64_t r) {
      if (r >= _space) {
        throw PreconditionError("PointSet: rank out of range");
      }
      auto it = std::lower_bound(_ranks.begin(), _ranks.end(), r);
      if (it == _ranks.end() || *it != r) {
        _ranks.insert(it, r);
      }
    }

    bool contains(std::span<element_index_type const> p) const {
      return contains_rank(rank(p));
    }

    bool contains_rank(std::uint64_t r) const {
      return std::binary_search(_ranks.begin(), _ranks.end(), r);
    }

    std::uint64_t rank(std::span<element_index_type const> p) const {
      if (p.size() != _arity) {
        throw PreconditionError("PointSet: point of arity "
                                + std::to_string(p.size()) + ", expected "
                                + std::to_string(_arity));
      }
      for (auto x : p) {
        if (x >= _degree) {
          throw PreconditionError("PointSet: coordinate out of range");
        }
      }
      return rank_of(p, _degree);
    }

    Point point(std::uint64_t r) const {
      return unrank(r, _degree, _arity);
    }

    // Sorted ranks.
    std::vector<std::uint64_t> const& ranks() const noexcept {
      return _ranks;
    }

    std::vector<Point> points() const {
      std::vector<Point> result;
      result.reserve(_ranks.size());
      for (auto r : _ranks) {
        result.push_back(point(r));
      }
      return result;
    }

    // Ranks of the points of S^n not in this set, sorted.
    std::vector<std::uint64_t> complement_ranks() const {
      std::vector<std::uint64_t> result;
      auto                       it = _ranks.begin();
      for (std::uint64_t r = 0; r < _space; ++r) {
        if (it != _ranks.end() && *it == r) {
          ++it;
        } else {
          result.push_back(r);
        }
      }
      return result;
    }

    bool operator==(PointSet const&) const = default;

   private:
    friend PointSet union_of(PointSet const&, PointSet const&);
    friend PointSet intersection_of(PointSet const&, PointSet const&);

    std::size_t                _degree;
    std::size_t                _arity;
    std::uint64_t              _space;
    std::vector<std::uint64_t> _ranks;
  };

  namespace detail {
    inline void check_compatible(PointSet const& A, PointSet const& B) {
      if (A.arity() != B.arity() || A.degree() != B.degree()) {
        throw PreconditionError("point sets over different spaces: arity "
                                + std::to_string(A.arity()) + " vs "
                                + std::to_string(B.arity()));
      }
    }
  }  // namespace detail

  inline PointSet union_of(PointSet const& A, PointSet const& B) {
    detail::check_compatible(A, B);
    PointSet result(A.degree(), A.arity());
    std::set_union(A._ranks.begin(),
                   A._ranks.end(),
                   B._ranks.begin(),
                   B._ranks.end(),
                   std::back_inserter(result._ranks));
    return result;
  }

  inline PointSet intersection_of(PointSet const& A, PointSet const& B) {
    detail::check_compatible(A, B);
    PointSet result(A.degree(), A.arity());
    std::set_intersection(A._ranks.begin(),
                          A._ranks.end(),
                          B._ranks.begin(),
                          B._ranks.end(),
                          std::back_inserter(result._ranks));
    return result;
  }

  inline std::string to_string(std::span<element_index_type const> p,
                               FiniteSemigroup const&               S) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
      out += (i == 0 ? "" : ",") + S.name(p[i]);
    }
    return out + ")";
  }

}  // namespace crsg

#endif  // CRSG_POINT_SET_HPP_
