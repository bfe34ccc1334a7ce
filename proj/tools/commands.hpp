// crsg - algebraic geometry over finite completely regular semigroups
//
// The subcommands of the crsg tool. Each reads and validates all of its
// inputs before computing anything, writes its report to `out`, diagnostics
// to `err`, and returns the process exit code:
//
//   0  success (associative / built / decomposed / Algebraic / PASS)
//   1  negative answer (not associative / NotAlgebraic / FAIL)
//   2  unreadable or malformed input file
//   3  invalid strong semilattice spec or other precondition failure
//   4  decomposition failure
//   5  Unknown (the cap was reached)

#ifndef CRSG_TOOLS_COMMANDS_HPP_
#define CRSG_TOOLS_COMMANDS_HPP_

#include <cstddef>      // for size_t
#include <fstream>      // for ifstream, ofstream
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <sstream>      // for ostringstream
#include <string>       // for string
#include <vector>       // for vector

#include "crsg/crsg.hpp"

namespace crsg::cli {

  enum exit_code : int {
    ok              = 0,
    negative        = 1,
    input_error     = 2,
    invalid_spec    = 3,
    decompose_error = 4,
    unknown         = 5
  };

  struct RunConfig {
    std::size_t cap           = 0;  // 0: the default for the space
    bool        deterministic = true;
    bool        machine       = false;
  };

  class InputError : public Error {
   public:
    using Error::Error;
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  inline void write_file(std::string const& path, std::string const& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
      throw InputError(path + ": cannot write file");
    }
  }

  // Runs the parser, prefixing errors with the path.
  template <typename Parse>
  auto load(std::string const& path, Parse&& parse) {
    auto const text = read_file(path);
    try {
      return parse(text);
    } catch (ParseError const& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  namespace detail {
    inline char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    // One line per key. Text mode: "key: value"; machine mode: "key=value"
    // with spaces in keys replaced by underscores.
    class Report {
     public:
      Report(std::ostream& out, bool machine) : _out(out), _machine(machine) {}

      void field(std::string key,
                 std::string const& value,
                 std::string const& machine_key = "") {
        if (_machine && !machine_key.empty()) {
          _out << machine_key << '=' << value << '\n';
        } else if (_machine) {
          for (auto& c : key) {
            if (c == ' ' || c == '-' || c == '.') {
              c = '_';
            }
          }
          _out << key << '=' << value << '\n';
        } else {
          _out << key << ": " << value << '\n';
        }
      }

     private:
      std::ostream& _out;
      bool          _machine;
    };

    inline std::string format_classes(
        FiniteSemigroup const&                              S,
        std::vector<std::vector<element_index_type>> const& classes,
        bool                                                machine) {
      std::string out;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        out += machine ? (c == 0 ? "" : ";") : (c == 0 ? "{" : " {");
        for (std::size_t i = 0; i < classes[c].size(); ++i) {
          out += (i == 0 ? "" : (machine ? "," : " ")) + S.name(classes[c][i]);
        }
        out += machine ? "" : "}";
      }
      return out;
    }

    // x1, ..., xn, avoiding element names.
    inline std::vector<std::string> variable_names(FiniteSemigroup const& S,
                                                   std::size_t            n) {
      std::vector<std::string> result;
      for (std::size_t i = 1; i <= n; ++i) {
        std::string name = "x" + std::to_string(i);
        while (S.index_of(name)) {
          name = "_" + name;
        }
        result.push_back(name);
      }
      return result;
    }

    inline std::size_t cap_for(RunConfig const& config,
                               std::size_t      degree,
                               std::size_t      arity) {
      return config.cap != 0 ? config.cap : default_cap(degree, arity);
    }
  }  // namespace detail

  inline int cmd_check(std::string const& path,
                       RunConfig const&   config,
                       std::ostream&      out,
                       std::ostream&      err) {
    SgpTable raw;
    try {
      raw = load(path, [](std::string const& t) { return parse_sgp_table(t); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    detail::Report report(out, config.machine);
    report.field("size", std::to_string(raw.table.size()));
    auto const violations = check_associativity(raw.table);
    report.field("associative", detail::yes_no(violations.empty()));
    if (!violations.empty()) {
      auto const [i, j, k] = violations.front();
      report.field("violations", std::to_string(violations.size()));
      report.field("first violation",
                   "(" + raw.names[i] + " " + raw.names[j] + ") " + raw.names[k]);
      return negative;
    }
    FiniteSemigroup const S(raw.names, raw.table);
    auto const            cr = is_completely_regular(S);
    report.field("c.r.", detail::yes_no(cr.completely_regular), "completely_regular");
    if (!cr.completely_regular) {
      report.field("non-c.r. witness", S.name(*cr.witness), "non_cr_witness");
    }
    report.field("simple", detail::yes_no(is_simple(S)));
    report.field("completely simple", detail::yes_no(is_completely_simple(S)));
    report.field("semilattice", detail::yes_no(is_semilattice(S)));
    std::string idem;
    for (auto e : idempotents(S)) {
      idem += (idem.empty() ? "" : (config.machine ? "," : " ")) + S.name(e);
    }
    report.field("idempotents", idem);
    report.field("j-classes", detail::format_classes(S, j_classes(S), config.machine));
    return ok;
  }

  // Writes the built table to out_path (or `out`) and, with an out_path, the
  // labeling to out_path + ".labels".
  inline int cmd_build(std::string const&                path,
                       std::optional<std::string> const& out_path,
                       RunConfig const&,
                       std::ostream& out,
                       std::ostream& err) {
    StrongSemilatticeSpec spec{catalog::trivial(), {}, {}};
    try {
      spec = load(path, [](std::string const& t) { return parse_slat(t); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    try {
      auto const built  = build_strong_semilattice(std::move(spec));
      auto const table  = write_sgp(built.semigroup());
      auto const labels = write_labels(
          built.semigroup(), built.omega().carrier(), built.labeling());
      if (out_path) {
        write_file(*out_path, table);
        write_file(*out_path + ".labels", labels);
      } else {
        out << table;
      }
    } catch (InvalidSpecError const& e) {
      err << path << ": invalid specification\n" << e.report().to_string();
      return invalid_spec;
    } catch (InputError const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    return ok;
  }

  inline int cmd_decompose(std::string const&                path,
                           std::optional<std::string> const& out_path,
                           RunConfig const&,
                           std::ostream& out,
                           std::ostream& err) {
    std::optional<FiniteSemigroup> S;
    try {
      S = load(path, [](std::string const& t) { return parse_sgp(t); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    try {
      auto const result = decompose(*S);
      if (!result) {
        err << "decomposition failed: " << to_string(result.failure->kind)
            << ": " << result.failure->message << '\n';
        return decompose_error;
      }
      auto const text = write_slat(result.decomposition->spec);
      if (out_path) {
        write_file(*out_path, text);
      } else {
        out << text;
      }
    } catch (NotCompletelyRegularError const& e) {
      err << "decomposition precondition failed: " << e.what() << '\n';
      return decompose_error;
    } catch (InputError const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    return ok;
  }

  inline int cmd_solve(std::string const& sgp_path,
                       std::string const& eqs_path,
                       RunConfig const&,
                       std::ostream& out,
                       std::ostream& err) {
    std::optional<FiniteSemigroup> S;
    EqsFile                        eqs;
    try {
      S   = load(sgp_path, [](std::string const& t) { return parse_sgp(t); });
      eqs = load(eqs_path, [&](std::string const& t) { return parse_eqs(t, *S); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    for (auto const& w : eqs.warnings) {
      err << eqs_path << ": warning: " << w << '\n';
    }
    try {
      out << write_pts(solve(*S, eqs.system), *S);
    } catch (Error const& e) {
      err << e.what() << '\n';
      return invalid_spec;
    }
    return ok;
  }

  inline int cmd_algebraic(std::string const& sgp_path,
                           std::string const& pts_path,
                           RunConfig const&   config,
                           std::ostream&      out,
                           std::ostream&      err) {
    std::optional<FiniteSemigroup> S;
    std::optional<PointSet>        Y;
    try {
      S = load(sgp_path, [](std::string const& t) { return parse_sgp(t); });
      Y = load(pts_path, [&](std::string const& t) { return parse_pts(t, *S); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    AlgebraicityVerdict verdict{};
    try {
      verdict = decide_algebraic(
          *S, *Y, detail::cap_for(config, S->size(), Y->arity()));
    } catch (Error const& e) {
      err << e.what() << '\n';
      return invalid_spec;
    }
    detail::Report report(out, config.machine);
    report.field("verdict", to_string(verdict.kind));
    report.field("closure-size", std::to_string(verdict.closure_size));
    report.field("complete", detail::yes_no(verdict.complete));
    switch (verdict.kind) {
      case AlgebraicityVerdict::Kind::algebraic: {
        report.field("witness-size", std::to_string(verdict.witness.equations.size()));
        auto const vars = detail::variable_names(*S, Y->arity());
        if (config.machine) {
          for (auto const& eq : verdict.witness.equations) {
            report.field("equation", to_string(eq, *S, vars));
          }
        } else {
          out << "witness:\n" << write_eqs(verdict.witness, *S, vars);
        }
        return ok;
      }
      case AlgebraicityVerdict::Kind::not_algebraic: {
        report.field("stuck-point", to_string(*verdict.stuck(), *S));
        std::string all;
        for (auto const& p : verdict.stuck_points) {
          all += (all.empty() ? "" : " ") + to_string(p, *S);
        }
        report.field("stuck-points", all);
        return negative;
      }
      case AlgebraicityVerdict::Kind::unknown:
        return unknown;
    }
    return ok;
  }

  inline int cmd_theorem2(std::string const& path,
                          RunConfig const&   config,
                          std::ostream&      out,
                          std::ostream&      err) {
    std::optional<StrongSemilatticeSpec> spec;
    try {
      spec = load(path, [](std::string const& t) { return parse_slat(t); });
    } catch (Error const& e) {
      err << e.what() << '\n';
      return input_error;
    }
    std::optional<StrongSemilattice> sl;
    Theorem2Report                   result;
    try {
      sl     = build_strong_semilattice(std::move(*spec));
      result = verify_theorem2(
          *sl, detail::cap_for(config, sl->semigroup().size(), 2));
    } catch (InvalidSpecError const& e) {
      err << path << ": invalid specification\n" << e.report().to_string();
      return invalid_spec;
    } catch (PreconditionError const& e) {
      err << path << ": " << e.what() << '\n';
      return invalid_spec;
    }

    auto const& S = sl->semigroup();
    for (auto const& c : result.cases) {
      std::string line = config.machine ? "record=case" : "case:";
      line += " alpha=" + sl->omega().name(c.alpha);
      line += " beta=" + sl->omega().name(c.beta);
      line += " b=" + S.name(c.b);
      line += std::string(" verdict=") + to_string(c.verdict.kind);
      switch (c.verdict.kind) {
        case AlgebraicityVerdict::Kind::not_algebraic:
          line += " stuck-point=" + to_string(*c.verdict.stuck(), S);
          line += " stuck-count=" + std::to_string(c.verdict.stuck_points.size());
          break;
        case AlgebraicityVerdict::Kind::algebraic:
          line += " witness-size="
                  + std::to_string(c.verdict.witness.equations.size());
          break;
        case AlgebraicityVerdict::Kind::unknown:
          break;
      }
      line += " closure-size=" + std::to_string(c.verdict.closure_size);
      line += std::string(" complete=") + detail::yes_no(c.verdict.complete);
      line += " predicted-point=" + to_string(c.predicted_point, S);
      line += std::string(" predicted-stuck=")
              + detail::yes_no(c.predicted_point_stuck);
      out << line << '\n';
    }
    detail::Report report(out, config.machine);
    report.field("cases", std::to_string(result.cases.size()));
    report.field("not-algebraic", std::to_string(result.not_algebraic));
    report.field("algebraic", std::to_string(result.algebraic));
    report.field("unknown", std::to_string(result.unknown));
    report.field("result", result.pass() ? "PASS" : "FAIL");
    return result.pass() ? ok : negative;
  }

}  // namespace crsg::cli

#endif  // CRSG_TOOLS_COMMANDS_HPP_
