// crsg - algebraic geometry over finite completely regular semigroups
//
// Terms of the language {., ^-1} with one constant per element of a fixed
// semigroup S, their text syntax, and their evaluation at points of S^n.
//
// Text syntax:
//
//   term   := factor { factor }       juxtaposition, left associative
//   factor := atom { "'" }            each apostrophe is one inverse
//   atom   := identifier | "(" term ")"
//
// Identifiers are maximal runs of characters other than whitespace and
// ( ) ' = #. They resolve against the declared variables first, then against
// the element names of S.

#ifndef CRSG_TERM_HPP_
#define CRSG_TERM_HPP_

#include <algorithm>    // for max
#include <cctype>       // for isspace
#include <cstddef>      // for size_t
#include <memory>       // for shared_ptr, make_shared
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "exception.hpp"
#include "semigroup.hpp"

namespace crsg {

  // An immutable term tree. Copies share structure.
  class Term {
   public:
    enum class Kind { variable, constant, product, inverse };

    static Term variable(std::size_t position) {
      return Term(std::make_shared<Node>(Node{Kind::variable, position, {}, {}}));
    }

    static Term constant(element_index_type element) {
      return Term(std::make_shared<Node>(Node{Kind::constant, element, {}, {}}));
    }

    static Term product(Term left, Term right) {
      return Term(std::make_shared<Node>(
          Node{Kind::product, 0, std::move(left._node), std::move(right._node)}));
    }

    static Term inverse(Term inner) {
      return Term(std::make_shared<Node>(
          Node{Kind::inverse, 0, std::move(inner._node), {}}));
    }

    Kind kind() const noexcept {
      return _node->kind;
    }

    // Variable position, or constant element index.
    std::size_t index() const noexcept {
      return _node->index;
    }

    element_index_type element() const noexcept {
      return static_cast<element_index_type>(_node->index);
    }

    // Product: left factor. Inverse: the inner term.
    Term left() const {
      return Term(_node->left);
    }

    Term right() const {
      return Term(_node->right);
    }

    Term inner() const {
      return Term(_node->left);
    }

    bool is_leaf() const noexcept {
      return kind() == Kind::variable || kind() == Kind::constant;
    }

    // Leaves have depth 0.
    std::size_t depth() const {
      switch (kind()) {
        case Kind::product:
          return 1 + std::max(left().depth(), right().depth());
        case Kind::inverse:
          return 1 + inner().depth();
        default:
          return 0;
      }
    }

    // One more than the largest variable position, 0 if there is none.
    std::size_t arity() const {
      switch (kind()) {
        case Kind::variable:
          return index() + 1;
        case Kind::product:
          return std::max(left().arity(), right().arity());
        case Kind::inverse:
          return inner().arity();
        default:
          return 0;
      }
    }

    bool operator==(Term const& that) const {
      if (_node == that._node) {
        return true;
      }
      if (kind() != that.kind()) {
        return false;
      }
      switch (kind()) {
        case Kind::product:
          return left() == that.left() && right() == that.right();
        case Kind::inverse:
          return inner() == that.inner();
        default:
          return index() == that.index();
      }
    }

   private:
    struct Node {
      Kind                        kind;
      std::size_t                 index;
      std::shared_ptr<Node const> left;
      std::shared_ptr<Node const> right;
    };

    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  inline Term operator*(Term const& x, Term const& y) {
    return Term::product(x, y);
  }

  struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(Equation const&) const = default;
  };

  struct EquationSystem {
    std::size_t           arity = 0;
    std::vector<Equation> equations;
  };

  // Membership flags of the variables that occur in t, sized to arity.
  inline std::vector<bool> occurring_variables(Term const& t, std::size_t arity) {
    std::vector<bool> result(arity, false);
    auto              visit = [&result](auto&& self, Term const& u) -> void {
      switch (u.kind()) {
        case Term::Kind::variable:
          if (u.index() < result.size()) {
            result[u.index()] = true;
          }
          break;
        case Term::Kind::product:
          self(self, u.left());
          self(self, u.right());
          break;
        case Term::Kind::inverse:
          self(self, u.inner());
          break;
        default:
          break;
      }
    };
    visit(visit, t);
    return result;
  }

  // Constant occurrences in left-to-right order.
  inline std::vector<element_index_type> constants(Term const& t) {
    std::vector<element_index_type> result;
    auto visit = [&result](auto&& self, Term const& u) -> void {
      switch (u.kind()) {
        case Term::Kind::constant:
          result.push_back(u.element());
          break;
        case Term::Kind::product:
          self(self, u.left());
          self(self, u.right());
          break;
        case Term::Kind::inverse:
          self(self, u.inner());
          break;
        default:
          break;
      }
    };
    visit(visit, t);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void print_term(std::string&                    out,
                           Term const&                     t,
                           FiniteSemigroup const&          S,
                           std::span<std::string const>    vars) {
      switch (t.kind()) {
        case Term::Kind::variable:
          out += t.index() < vars.size() ? vars[t.index()]
                                         : "x" + std::to_string(t.index());
          break;
        case Term::Kind::constant:
          out += S.name(t.element());
          break;
        case Term::Kind::product:
          print_term(out, t.left(), S, vars);
          out += ' ';
          if (t.right().kind() == Term::Kind::product) {
            out += '(';
            print_term(out, t.right(), S, vars);
            out += ')';
          } else {
            print_term(out, t.right(), S, vars);
          }
          break;
        case Term::Kind::inverse:
          if (t.inner().kind() == Term::Kind::product) {
            out += '(';
            print_term(out, t.inner(), S, vars);
            out += ')';
          } else {
            print_term(out, t.inner(), S, vars);
          }
          out += '\'';
          break;
      }
    }
  }  // namespace detail

  // Minimal parentheses; parse_term(to_string(t)) == t.
  inline std::string to_string(Term const&                  t,
                               FiniteSemigroup const&       S,
                               std::span<std::string const> vars) {
    std::string out;
    detail::print_term(out, t, S, vars);
    return out;
  }

  inline std::string to_string(Equation const&              eq,
                               FiniteSemigroup const&       S,
                               std::span<std::string const> vars) {
    return to_string(eq.lhs, S, vars) + " = " + to_string(eq.rhs, S, vars);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool is_reserved(char c) {
      return std::isspace(static_cast<unsigned char>(c))
             || reserved_characters.find(c) != std::string_view::npos;
    }

    class TermParser {
     public:
      TermParser(std::string_view                 text,
                 std::span<std::string const>     vars,
                 FiniteSemigroup const&           S,
                 std::size_t                      line,
                 std::size_t                      column_offset,
                 std::vector<std::string>*        warnings)
          : _text(text),
            _vars(vars),
            _S(S),
            _line(line),
            _column_offset(column_offset),
            _warnings(warnings),
            _pos(0) {}

      Term parse() {
        skip_space();
        if (_pos == _text.size()) {
          error("empty term");
        }
        Term t = term();
        skip_space();
        if (_pos != _text.size()) {
          error(std::string("unexpected '") + _text[_pos] + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void error(std::string const& msg) const {
        throw ParseError(_line, _column_offset + _pos + 1, msg);
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at_atom_start() {
        skip_space();
        return _pos < _text.size()
               && (_text[_pos] == '(' || !is_reserved(_text[_pos]));
      }

      Term term() {
        Term result = factor();
        while (at_atom_start()) {
          result = Term::product(std::move(result), factor());
        }
        return result;
      }

      Term factor() {
        Term result = atom();
        while (true) {
          skip_space();
          if (_pos < _text.size() && _text[_pos] == '\'') {
            ++_pos;
            result = Term::inverse(std::move(result));
          } else {
            return result;
          }
        }
      }

      Term atom() {
        skip_space();
        if (_pos == _text.size()) {
          error("unexpected end of term");
        }
        if (_text[_pos] == '(') {
          ++_pos;
          skip_space();
          if (_pos < _text.size() && _text[_pos] == ')') {
            error("empty parentheses");
          }
          Term t = term();
          skip_space();
          if (_pos == _text.size() || _text[_pos] != ')') {
            error("expected ')'");
          }
          ++_pos;
          return t;
        }
        if (is_reserved(_text[_pos])) {
          error(std::string("unexpected '") + _text[_pos] + "'");
        }
        std::size_t const start = _pos;
        while (_pos < _text.size() && !is_reserved(_text[_pos])) {
          ++_pos;
        }
        std::string const name(_text.substr(start, _pos - start));
        for (std::size_t i = 0; i < _vars.size(); ++i) {
          if (_vars[i] == name) {
            if (_warnings != nullptr && _S.index_of(name)) {
              _warnings->push_back("identifier \"" + name
                                   + "\" names both a variable and an "
                                     "element; using the variable");
            }
            return Term::variable(i);
          }
        }
        if (auto e = _S.index_of(name)) {
          return Term::constant(*e);
        }
        _pos = start;
        error("unknown identifier \"" + name + "\"");
      }

      std::string_view             _text;
      std::span<std::string const> _vars;
      FiniteSemigroup const&       _S;
      std::size_t                  _line;
      std::size_t                  _column_offset;
      std::vector<std::string>*    _warnings;
      std::size_t                  _pos;
    };
  }  // namespace detail

  // Throws ParseError (with a 1-based column) on syntax errors, unknown
  // identifiers and empty input. Name collisions resolve to the variable and
  // are appended to *warnings when given.
  inline Term parse_term(std::string_view              text,
                         std::span<std::string const>  vars,
                         FiniteSemigroup const&        S,
                         std::vector<std::string>*     warnings = nullptr) {
    return detail::TermParser(text, vars, S, 0, 0, warnings).parse();
  }

  // As parse_term, with positions reported relative to a line of a file.
  inline Term parse_term_at(std::string_view             text,
                            std::span<std::string const> vars,
                            FiniteSemigroup const&       S,
                            std::size_t                  line,
                            std::size_t                  column_offset,
                            std::vector<std::string>*    warnings = nullptr) {
    return detail::TermParser(text, vars, S, line, column_offset, warnings)
        .parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  // Evaluates terms over a completely regular semigroup, with the group
  // inverses precomputed once.
  class Evaluator {
   public:
    explicit Evaluator(FiniteSemigroup const& S)
        : _S(&S), _inverse(inverse_table(S)) {}

    FiniteSemigroup const& semigroup() const noexcept {
      return *_S;
    }

    element_index_type inverse(element_index_type x) const {
      return _inverse.at(x);
    }

    element_index_type operator()(Term const&                          t,
                                  std::span<element_index_type const> point) const {
      if (t.arity() > point.size()) {
        throw PreconditionError("evaluate: term uses variable x"
                                + std::to_string(t.arity() - 1)
                                + " but the point has arity "
                                + std::to_string(point.size()));
      }
      for (auto p : point) {
        _S->validate_index(p);
      }
      return eval(t, point);
    }

   private:
    element_index_type eval(Term const&                          t,
                            std::span<element_index_type const> point) const {
      switch (t.kind()) {
        case Term::Kind::variable:
          return point[t.index()];
        case Term::Kind::constant:
          return t.element();
        case Term::Kind::product:
          return _S->product(eval(t.left(), point), eval(t.right(), point));
        case Term::Kind::inverse:
          return _inverse[eval(t.inner(), point)];
      }
      return 0;
    }

    FiniteSemigroup const*          _S;
    std::vector<element_index_type> _inverse;
  };

  inline element_index_type evaluate(FiniteSemigroup const&               S,
                                     Term const&                          t,
                                     std::span<element_index_type const> point) {
    return Evaluator(S)(t, point);
  }

}  // namespace crsg

#endif  // CRSG_TERM_HPP_
