// crsg - algebraic geometry over finite completely regular semigroups
//
// Readers and writers for the line-oriented text formats:
//
//   .sgp   Cayley table: n; n names; n rows of n names.
//   .slat  strong semilattice: an "omega" section, one "component <alpha>"
//          section per element of omega (each an inline .sgp block), and
//          "map <alpha> <beta>" sections of "b -> c" lines.
//   .eqs   system of equations: "vars x y ..." then "term = term" lines.
//   .pts   point set: "arity n" then one point (n names) per line; the
//          point of arity 0 is written "()".
//
// In every format, blank lines and lines whose first non-blank character is
// '#' are ignored. Errors are reported as ParseError with 1-based line numbers.

#ifndef CRSG_IO_HPP_
#define CRSG_IO_HPP_

#include <algorithm>    // for find
#include <cctype>       // for isspace
#include <charconv>     // for from_chars
#include <cstddef>      // for size_t
#include <istream>      // for istream
#include <iterator>     // for istreambuf_iterator
#include <map>          // for map
#include <optional>     // for optional
#include <sstream>      // for istringstream, ostringstream
#include <string>       // for string, getline
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "exception.hpp"
#include "point-set.hpp"
#include "semigroup.hpp"
#include "structure.hpp"
#include "term.hpp"

namespace crsg {

  namespace detail {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    struct Line {
      std::size_t        number;  // 1-based
      std::string        text;
      std::vector<Token> tokens;
    };

    inline std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> result;
      std::size_t        i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (i > start) {
          result.push_back({std::string(text.substr(start, i - start)), start + 1});
        }
      }
      return result;
    }

    // The significant lines of a text.
    inline std::vector<Line> significant_lines(std::string_view text) {
      std::vector<Line>  result;
      std::istringstream in{std::string(text)};
      std::string        line;
      for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') {
          continue;
        }
        result.push_back({number, line, std::move(tokens)});
      }
      return result;
    }

    class LineCursor {
     public:
      explicit LineCursor(std::string_view text)
          : _lines(significant_lines(text)), _pos(0), _last_line(0) {
        std::size_t count = 1;
        for (char c : text) {
          count += c == '\n';
        }
        _last_line = count;
      }

      bool done() const noexcept {
        return _pos == _lines.size();
      }

      Line const& peek() const {
        return _lines[_pos];
      }

      Line const& next(char const* what) {
        if (done()) {
          throw ParseError(_last_line, 0, std::string("unexpected end of input, expected ") + what);
        }
        return _lines[_pos++];
      }

     private:
      std::vector<Line> _lines;
      std::size_t       _pos;
      std::size_t       _last_line;
    };

    inline std::size_t parse_count(Token const& token,
                                   std::size_t  line,
                                   char const*  what) {
      std::size_t value = 0;
      auto const* first = token.text.data();
      auto const* last  = first + token.text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(line, token.column, std::string("expected ") + what
                                                 + ", found \"" + token.text + "\"");
      }
      return value;
    }

    inline std::string read_stream(std::istream& in) {
      return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    struct RawTable {
      std::vector<std::string> names;
      MultiplicationTable      table;
      std::size_t              first_line;
    };

    inline RawTable read_table_block(LineCursor& cursor) {
      auto const& header = cursor.next("element count");
      if (header.tokens.size() != 1) {
        throw ParseError(header.number, 0, "expected a single element count");
      }
      std::size_t const n = parse_count(header.tokens[0], header.number, "element count");
      if (n == 0) {
        throw ParseError(header.number, header.tokens[0].column,
                         "a semigroup must have at least one element");
      }
      RawTable result{{}, MultiplicationTable(n), header.number};

      auto const& names_line = cursor.next("element names");
      if (names_line.tokens.size() != n) {
        throw ParseError(names_line.number, 0,
                         "expected " + std::to_string(n) + " names, found "
                             + std::to_string(names_line.tokens.size()));
      }
      std::map<std::string, element_index_type> index;
      for (auto const& tok : names_line.tokens) {
        if (!is_valid_name(tok.text)) {
          throw ParseError(names_line.number, tok.column,
                           "invalid element name \"" + tok.text + "\"");
        }
        if (!index.emplace(tok.text, static_cast<element_index_type>(index.size())).second) {
          throw ParseError(names_line.number, tok.column,
                           "duplicate element name \"" + tok.text + "\"");
        }
        result.names.push_back(tok.text);
      }

      for (std::size_t i = 0; i < n; ++i) {
        auto const& row = cursor.next("table row");
        if (row.tokens.size() != n) {
          throw ParseError(row.number, 0,
                           "row " + std::to_string(i + 1) + " has "
                               + std::to_string(row.tokens.size())
                               + " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto it = index.find(row.tokens[j].text);
          if (it == index.end()) {
            throw ParseError(row.number, row.tokens[j].column,
                             "unknown element \"" + row.tokens[j].text + "\"");
          }
          result.table.at(i, j) = it->second;
        }
      }
      return result;
    }

    inline FiniteSemigroup to_semigroup(RawTable raw) {
      try {
        return FiniteSemigroup(std::move(raw.names), std::move(raw.table));
      } catch (Error const& e) {
        throw ParseError(raw.first_line, 0, e.what());
      }
    }

    inline void write_table_block(std::ostream& out, FiniteSemigroup const& S) {
      out << S.size() << '\n';
      for (element_index_type x = 0; x < S.size(); ++x) {
        out << (x == 0 ? "" : " ") << S.name(x);
      }
      out << '\n';
      for (element_index_type x = 0; x < S.size(); ++x) {
        for (element_index_type y = 0; y < S.size(); ++y) {
          out << (y == 0 ? "" : " ") << S.name(S.product(x, y));
        }
        out << '\n';
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // .sgp
  ////////////////////////////////////////////////////////////////////////

  // A table as written in a file, not yet checked for associativity.
  struct SgpTable {
    std::vector<std::string> names;
    MultiplicationTable      table;
  };

  inline SgpTable parse_sgp_table(std::string_view text) {
    detail::LineCursor cursor(text);
    auto               raw = detail::read_table_block(cursor);
    if (!cursor.done()) {
      throw ParseError(cursor.peek().number, 0, "unexpected content after the table");
    }
    return {std::move(raw.names), std::move(raw.table)};
  }

  inline FiniteSemigroup parse_sgp(std::string_view text) {
    detail::LineCursor cursor(text);
    auto               raw = detail::read_table_block(cursor);
    if (!cursor.done()) {
      throw ParseError(cursor.peek().number, 0, "unexpected content after the table");
    }
    return detail::to_semigroup(std::move(raw));
  }

  inline FiniteSemigroup read_sgp(std::istream& in) {
    return parse_sgp(detail::read_stream(in));
  }

  inline std::string write_sgp(FiniteSemigroup const& S) {
    std::ostringstream out;
    detail::write_table_block(out, S);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .slat
  ////////////////////////////////////////////////////////////////////////

  inline StrongSemilatticeSpec parse_slat(std::string_view text) {
    using detail::Line;
    detail::LineCursor cursor(text);

    auto const& first = cursor.next("\"omega\" section");
    if (first.tokens.size() != 1 || first.tokens[0].text != "omega") {
      throw ParseError(first.number, 1, "expected the \"omega\" section first");
    }
    auto const omega = detail::to_semigroup(detail::read_table_block(cursor));

    std::vector<std::optional<FiniteSemigroup>> components(omega.size());
    std::map<std::pair<element_index_type, element_index_type>, StructureMap> maps;

    auto is_section = [](Line const& line) {
      auto const& kw = line.tokens[0].text;
      return kw == "component" || kw == "map" || kw == "omega";
    };

    auto omega_index = [&](Line const& line, std::size_t t) {
      auto const& tok = line.tokens[t];
      auto        a   = omega.index_of(tok.text);
      if (!a) {
        throw ParseError(line.number, tok.column,
                         "unknown omega element \"" + tok.text + "\"");
      }
      return *a;
    };

    while (!cursor.done()) {
      Line const header = cursor.next("section");
      auto const& kw    = header.tokens[0].text;
      if (kw == "component") {
        if (header.tokens.size() != 2) {
          throw ParseError(header.number, 0, "expected \"component <alpha>\"");
        }
        auto const a = omega_index(header, 1);
        if (components[a]) {
          throw ParseError(header.number, header.tokens[1].column,
                           "duplicate component " + omega.name(a));
        }
        components[a] = detail::to_semigroup(detail::read_table_block(cursor));
      } else if (kw == "map") {
        if (header.tokens.size() != 3) {
          throw ParseError(header.number, 0, "expected \"map <alpha> <beta>\"");
        }
        auto const a = omega_index(header, 1);
        auto const b = omega_index(header, 2);
        if (!components[a] || !components[b]) {
          throw ParseError(header.number, 0,
                           "map given before both components are defined");
        }
        if (maps.contains({a, b})) {
          throw ParseError(header.number, 0, "duplicate map " + omega.name(a) + " "
                                                 + omega.name(b));
        }
        auto const&                       Sa = *components[a];
        auto const&                       Sb = *components[b];
        std::vector<std::optional<element_index_type>> image(Sb.size());
        while (!cursor.done() && !is_section(cursor.peek())) {
          auto const& line = cursor.next("map line");
          if (line.tokens.size() != 3 || line.tokens[1].text != "->") {
            throw ParseError(line.number, 0, "expected \"b -> c\"");
          }
          auto const  x    = Sb.index_of(line.tokens[0].text);
          if (!x) {
            throw ParseError(line.number, line.tokens[0].column,
                             "unknown element \"" + line.tokens[0].text
                                 + "\" of component " + omega.name(b));
          }
          auto const y = Sa.index_of(line.tokens[2].text);
          if (!y) {
            throw ParseError(line.number, line.tokens[2].column,
                             "unknown element \"" + line.tokens[2].text
                                 + "\" of component " + omega.name(a));
          }
          if (image[*x]) {
            throw ParseError(line.number, line.tokens[0].column,
                             "image of \"" + line.tokens[0].text + "\" given twice");
          }
          image[*x] = *y;
        }
        StructureMap map;
        for (element_index_type x = 0; x < Sb.size(); ++x) {
          if (!image[x]) {
            throw ParseError(header.number, 0,
                             "map " + omega.name(a) + " " + omega.name(b)
                                 + " gives no image for \"" + Sb.name(x) + "\"");
          }
          map.push_back(*image[x]);
        }
        maps.emplace(std::make_pair(a, b), std::move(map));
      } else {
        throw ParseError(header.number, 1, "unknown section \"" + kw + "\"");
      }
    }

    StrongSemilatticeSpec spec{omega, {}, std::move(maps)};
    for (element_index_type a = 0; a < omega.size(); ++a) {
      if (!components[a]) {
        throw ParseError(0, 0, "no component section for omega element \""
                                   + omega.name(a) + "\"");
      }
      spec.components.push_back(std::move(*components[a]));
    }
    return spec;
  }

  inline StrongSemilatticeSpec read_slat(std::istream& in) {
    return parse_slat(detail::read_stream(in));
  }

  // Maps in (alpha, beta) order; stored identity maps psi_{a,a} are omitted.
  inline std::string write_slat(StrongSemilatticeSpec const& spec) {
    std::ostringstream out;
    out << "omega\n";
    detail::write_table_block(out, spec.omega);
    for (element_index_type a = 0; a < spec.components.size(); ++a) {
      out << "component " << spec.omega.name(a) << '\n';
      detail::write_table_block(out, spec.components[a]);
    }
    for (auto const& [key, map] : spec.maps) {
      auto const [a, b] = key;
      if (a == b && map == identity_map(map.size())) {
        continue;
      }
      out << "map " << spec.omega.name(a) << ' ' << spec.omega.name(b) << '\n';
      for (element_index_type x = 0; x < map.size(); ++x) {
        out << spec.components[b].name(x) << " -> "
            << spec.components[a].name(map[x]) << '\n';
      }
    }
    return out.str();
  }

  // One "element component" line per element of the built semigroup.
  inline std::string write_labels(FiniteSemigroup const& S,
                                  FiniteSemigroup const& omega,
                                  Labeling const&        labeling) {
    std::ostringstream out;
    for (element_index_type s = 0; s < S.size(); ++s) {
      out << S.name(s) << ' ' << omega.name(component_of(labeling, s)) << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .eqs
  ////////////////////////////////////////////////////////////////////////

  struct EqsFile {
    std::vector<std::string> vars;
    EquationSystem           system;
    std::vector<std::string> warnings;
  };

  inline EqsFile parse_eqs(std::string_view text, FiniteSemigroup const& S) {
    detail::LineCursor cursor(text);
    EqsFile            result;
    auto const&        decl = cursor.next("\"vars\" declaration");
    if (decl.tokens[0].text != "vars") {
      throw ParseError(decl.number, 1, "expected \"vars\" declaration");
    }
    for (std::size_t i = 1; i < decl.tokens.size(); ++i) {
      auto const& tok = decl.tokens[i];
      if (!is_valid_name(tok.text)) {
        throw ParseError(decl.number, tok.column,
                         "invalid variable name \"" + tok.text + "\"");
      }
      if (std::find(result.vars.begin(), result.vars.end(), tok.text)
          != result.vars.end()) {
        throw ParseError(decl.number, tok.column,
                         "duplicate variable \"" + tok.text + "\"");
      }
      result.vars.push_back(tok.text);
    }
    result.system.arity = result.vars.size();

    while (!cursor.done()) {
      auto const& line = cursor.next("equation");
      auto const  eq   = line.text.find('=');
      if (eq == std::string::npos) {
        throw ParseError(line.number, 0, "expected \"term = term\"");
      }
      if (line.text.find('=', eq + 1) != std::string::npos) {
        throw ParseError(line.number, line.text.find('=', eq + 1) + 1,
                         "more than one '=' in an equation");
      }
      std::string_view const whole(line.text);
      auto lhs = parse_term_at(whole.substr(0, eq), result.vars, S, line.number, 0,
                               &result.warnings);
      auto rhs = parse_term_at(whole.substr(eq + 1), result.vars, S, line.number,
                               eq + 1, &result.warnings);
      result.system.equations.push_back({std::move(lhs), std::move(rhs)});
    }
    return result;
  }

  inline std::string write_eqs(EquationSystem const&           system,
                               FiniteSemigroup const&          S,
                               std::vector<std::string> const& vars) {
    std::ostringstream out;
    out << "vars";
    for (auto const& v : vars) {
      out << ' ' << v;
    }
    out << '\n';
    for (auto const& eq : system.equations) {
      out << to_string(eq, S, vars) << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .pts
  ////////////////////////////////////////////////////////////////////////

  inline PointSet parse_pts(std::string_view text, FiniteSemigroup const& S) {
    detail::LineCursor cursor(text);
    auto const&        header = cursor.next("\"arity n\"");
    if (header.tokens.size() != 2 || header.tokens[0].text != "arity") {
      throw ParseError(header.number, 1, "expected \"arity n\"");
    }
    std::size_t const n = detail::parse_count(header.tokens[1], header.number, "arity");
    PointSet          result(S.size(), n);
    while (!cursor.done()) {
      auto const& line = cursor.next("point");
      if (n == 0) {
        if (line.tokens.size() != 1 || line.tokens[0].text != "()") {
          throw ParseError(line.number, 0, "the point of arity 0 is written \"()\"");
        }
        result.insert(Point{});
        continue;
      }
      if (line.tokens.size() != n) {
        throw ParseError(line.number, 0,
                         "point has " + std::to_string(line.tokens.size())
                             + " coordinates, expected " + std::to_string(n));
      }
      Point p;
      for (auto const& tok : line.tokens) {
        auto x = S.index_of(tok.text);
        if (!x) {
          throw ParseError(line.number, tok.column,
                           "unknown element \"" + tok.text + "\"");
        }
        p.push_back(*x);
      }
      result.insert(p);
    }
    return result;
  }

  // Canonical order; byte-identical for equal sets.
  inline std::string write_pts(PointSet const& Y, FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "arity " << Y.arity() << '\n';
    for (auto r : Y.ranks()) {
      auto const p = Y.point(r);
      if (p.empty()) {
        out << "()";
      }
      for (std::size_t i = 0; i < p.size(); ++i) {
        out << (i == 0 ? "" : " ") << S.name(p[i]);
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace crsg

#endif  // CRSG_IO_HPP_
