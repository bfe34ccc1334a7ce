// crsg - algebraic geometry over finite completely regular semigroups
//
// Exception hierarchy. Every error raised by the library derives from
// crsg::Error, so callers that do not care about the category can catch a
// single type.

#ifndef CRSG_EXCEPTION_HPP_
#define CRSG_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string, to_string

namespace crsg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A table entry outside [0, n), or a table of the wrong shape.
  class MalformedTableError : public Error {
   public:
    MalformedTableError(std::size_t row, std::size_t col, std::string const& msg)
        : Error("malformed table at cell (" + std::to_string(row) + ", "
                + std::to_string(col) + "): " + msg),
          _row(row),
          _col(col) {}

    explicit MalformedTableError(std::string const& msg)
        : Error("malformed table: " + msg), _row(0), _col(0) {}

    std::size_t row() const noexcept {
      return _row;
    }
    std::size_t col() const noexcept {
      return _col;
    }

   private:
    std::size_t _row;
    std::size_t _col;
  };

  class NotAssociativeError : public Error {
   public:
    NotAssociativeError(std::size_t i, std::size_t j, std::size_t k)
        : Error("table is not associative: (a" + std::to_string(i) + " a"
                + std::to_string(j) + ") a" + std::to_string(k) + " != a"
                + std::to_string(i) + " (a" + std::to_string(j) + " a"
                + std::to_string(k) + ")") {}
  };

  class NotCompletelyRegularError : public Error {
   public:
    explicit NotCompletelyRegularError(std::string const& element)
        : Error("element " + element
                + " is not completely regular (lies in no subgroup)"),
          _element(element) {}

    std::string const& element() const noexcept {
      return _element;
    }

   private:
    std::string _element;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Text input errors. Line and column are 1-based; 0 means "not applicable".
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(format(line, column, msg)), _line(line), _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    static std::string
    format(std::size_t line, std::size_t column, std::string const& msg) {
      std::string out;
      if (line != 0) {
        out += "line " + std::to_string(line);
      }
      if (column != 0) {
        out += (out.empty() ? "column " : ", column ") + std::to_string(column);
      }
      return out.empty() ? msg : out + ": " + msg;
    }

    std::size_t _line;
    std::size_t _column;
  };

}  // namespace crsg

#endif  // CRSG_EXCEPTION_HPP_
