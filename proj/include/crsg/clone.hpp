// crsg - algebraic geometry over finite completely regular semigroups
//
// The clone of term functions S^n -> S: the least set of functions containing
// the n projections and the |S| constant functions, closed under pointwise
// product and pointwise group inverse. Functions are stored extensionally as
// value vectors indexed by the rank of the point in S^n.
//
// CloneEnumerator discovers the clone breadth first by term depth, so the
// witness term kept for each function has minimal depth among the terms
// discovered for it. Discovery order is deterministic: the leaves (projections
// in position order, then constants in element order), then for every depth d
// the inverses of the depth-d functions, then the products f g over all pairs
// (f, g) in index order with at least one factor of depth d.

#ifndef CRSG_CLONE_HPP_
#define CRSG_CLONE_HPP_

#include <algorithm>      // for equal, fill, max
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "exception.hpp"
#include "point-set.hpp"
#include "semigroup.hpp"
#include "term.hpp"

namespace crsg {

  struct TermFunction {
    std::size_t                     arity;
    std::vector<element_index_type> values;
    std::optional<Term>             witness;

    // Extensional equality: the witness is ignored.
    bool operator==(TermFunction const& that) const {
      return arity == that.arity && values == that.values;
    }
  };

  // 2,000,000 stored values, expressed as a number of functions.
  inline std::size_t default_cap(std::size_t degree, std::size_t arity) {
    auto const length = space_size(degree, arity);
    return std::max<std::size_t>(1, 2'000'000 / length);
  }

  class CloneEnumerator {
   public:
    enum class Status { complete, stopped, cap_reached };

    CloneEnumerator(FiniteSemigroup const& S, std::size_t arity, std::size_t cap)
        : _S(&S),
          _inverse(inverse_table(S)),
          _arity(arity),
          _length(static_cast<std::size_t>(space_size(S.size(), arity))),
          _cap(cap),
          _values(),
          _terms(),
          _depths(),
          _index(16, Hash{this}, Equal{this}) {
      if (cap == 0) {
        throw PreconditionError("clone closure: cap must be positive");
      }
    }

    CloneEnumerator(CloneEnumerator const&)            = delete;
    CloneEnumerator& operator=(CloneEnumerator const&) = delete;

    // Runs until the fixed point, the cap, or visit(id) returning false for a
    // newly discovered function. May be called once.
    template <typename Visitor>
    Status run(Visitor&& visit) {
      std::size_t const n = _S->size();
      // Leaves.
      for (std::size_t i = 0; i < _arity; ++i) {
        auto* v = candidate();
        for (std::size_t r = 0; r < _length; ++r) {
          v[r] = unrank_coordinate(r, i);
        }
        if (auto s = commit([&] { return Term::variable(i); }, 0, visit)) {
          return *s;
        }
      }
      for (element_index_type c = 0; c < n; ++c) {
        auto* v = candidate();
        std::fill(v, v + _length, c);
        if (auto s = commit([&] { return Term::constant(c); }, 0, visit)) {
          return *s;
        }
      }

      std::size_t begin = 0;
      std::size_t end   = size();
      for (std::size_t depth = 1; begin < end; ++depth) {
        for (std::size_t f = begin; f < end; ++f) {
          auto*       v  = candidate();
          auto const* fv = data(f);
          for (std::size_t r = 0; r < _length; ++r) {
            v[r] = _inverse[fv[r]];
          }
          if (auto s = commit([&] { return Term::inverse(_terms[f]); }, depth, visit)) {
            return *s;
          }
        }
        for (std::size_t f = 0; f < end; ++f) {
          for (std::size_t g = (f < begin ? begin : 0); g < end; ++g) {
            auto*       v  = candidate();
            auto const* fv = data(f);
            auto const* gv = data(g);
            for (std::size_t r = 0; r < _length; ++r) {
              v[r] = _S->product(fv[r], gv[r]);
            }
            if (auto s = commit(
                    [&] { return Term::product(_terms[f], _terms[g]); },
                    depth,
                    visit)) {
              return *s;
            }
          }
        }
        begin = end;
        end   = size();
      }
      _values.resize(size() * _length);
      return Status::complete;
    }

    Status run() {
      return run([](std::size_t) { return true; });
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    std::size_t arity() const noexcept {
      return _arity;
    }

    // Number of points of S^n, the length of each value vector.
    std::size_t length() const noexcept {
      return _length;
    }

    std::span<element_index_type const> values(std::size_t id) const {
      return {data(id), _length};
    }

    Term const& term(std::size_t id) const {
      return _terms.at(id);
    }

    std::size_t depth(std::size_t id) const {
      return _depths.at(id);
    }

    TermFunction function(std::size_t id) const {
      auto v = values(id);
      return {_arity, {v.begin(), v.end()}, _terms.at(id)};
    }

   private:
    struct Hash {
      CloneEnumerator const* self;
      std::size_t operator()(std::size_t id) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        auto const*   v = self->data(id);
        for (std::size_t r = 0; r < self->_length; ++r) {
          h = (h ^ v[r]) * 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
      }
    };

    struct Equal {
      CloneEnumerator const* self;
      bool operator()(std::size_t x, std::size_t y) const noexcept {
        auto const* u = self->data(x);
        auto const* v = self->data(y);
        return std::equal(u, u + self->_length, v);
      }
    };

    element_index_type const* data(std::size_t id) const {
      return _values.data() + id * _length;
    }

    element_index_type unrank_coordinate(std::size_t r, std::size_t i) const {
      std::size_t const n = _S->size();
      for (std::size_t j = _arity - 1; j > i; --j) {
        r /= n;
      }
      return static_cast<element_index_type>(r % n);
    }

    // Scratch slot right after the stored functions.
    element_index_type* candidate() {
      _values.resize((size() + 1) * _length);
      return _values.data() + size() * _length;
    }

    // Stores the candidate if it is new. Returns a status when the run must
    // end, nullopt to continue.
    template <typename MakeTerm, typename Visitor>
    std::optional<Status>
    commit(MakeTerm&& make_term, std::size_t depth, Visitor& visit) {
      std::size_t const id = size();
      if (_index.contains(id)) {
        return std::nullopt;
      }
      if (id >= _cap) {
        _values.resize(id * _length);
        return Status::cap_reached;
      }
      _terms.push_back(make_term());
      _depths.push_back(depth);
      _index.insert(id);
      if (!visit(id)) {
        _values.resize(size() * _length);
        return Status::stopped;
      }
      return std::nullopt;
    }

    FiniteSemigroup const*                          _S;
    std::vector<element_index_type>                 _inverse;
    std::size_t                                     _arity;
    std::size_t                                     _length;
    std::size_t                                     _cap;
    std::vector<element_index_type>                 _values;
    std::vector<Term>                               _terms;
    std::vector<std::size_t>                        _depths;
    std::unordered_set<std::size_t, Hash, Equal>    _index;
  };

  struct CloneClosure {
    std::vector<TermFunction> functions;
    bool                      complete;
  };

  // The whole clone, or the first cap functions discovered with complete ==
  // false if the clone has more than cap members.
  inline CloneClosure
  clone_closure(FiniteSemigroup const& S, std::size_t arity, std::size_t cap) {
    CloneEnumerator e(S, arity, cap);
    auto const      status = e.run();
    CloneClosure    result{{}, status == CloneEnumerator::Status::complete};
    result.functions.reserve(e.size());
    for (std::size_t id = 0; id < e.size(); ++id) {
      result.functions.push_back(e.function(id));
    }
    return result;
  }

}  // namespace crsg

#endif  // CRSG_CLONE_HPP_
