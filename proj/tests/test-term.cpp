// crsg - algebraic geometry over finite completely regular semigroups

#include <string>  // for string
#include <vector>  // for vector

#include "catch_amalgamated.hpp"
#include "crsg/crsg.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace crsg;

namespace {
  std::vector<std::string> const xy{"x", "y"};

  struct T3 {
    StrongSemilattice      sl = catalog::t3();
    FiniteSemigroup const& S  = sl.semigroup();
    element_index_type     e  = *S.index_of("e");
    element_index_type     a  = *S.index_of("a");
    element_index_type     f  = *S.index_of("f");
    element_index_type     top = 0, bot = 1;

    Term parse(std::string const& text) const {
      return parse_term(text, std::span(xy).first(1), S);
    }
  };

  Term x() {
    return Term::variable(0);
  }
  Term y() {
    return Term::variable(1);
  }
  Term c(element_index_type s) {
    return Term::constant(s);
  }
}  // namespace

TEST_CASE("Term basics", "[term-lang]") {
  auto const t = Term::inverse(x() * c(2)) * y();
  CHECK(t.kind() == Term::Kind::product);
  CHECK(t.left().kind() == Term::Kind::inverse);
  CHECK(t.depth() == 3);
  CHECK(t.arity() == 2);
  CHECK(c(0).depth() == 0);
  CHECK(c(0).arity() == 0);
  CHECK(t == Term::inverse(x() * c(2)) * y());
  CHECK_FALSE(t == Term::inverse(x() * c(1)) * y());
  CHECK(occurring_variables(x() * c(1), 3) == std::vector<bool>{true, false, false});
  CHECK(constants(c(2) * (x() * c(0))) == std::vector<element_index_type>{2, 0});
}

TEST_CASE("parse_term", "[term-lang]") {
  T3 t3;
  auto const& S = t3.S;
  CHECK(parse_term("x", xy, S) == x());
  CHECK(parse_term("x (y f)' a", xy, S)
        == (x() * Term::inverse(y() * c(t3.f))) * c(t3.a));
  CHECK(parse_term("x''", xy, S) == Term::inverse(Term::inverse(x())));
  CHECK(parse_term("  x   y  ", xy, S) == x() * y());
  CHECK(parse_term("x y x", xy, S) == (x() * y()) * x());
  CHECK(parse_term("x (y x)", xy, S) == x() * (y() * x()));
  CHECK(parse_term("(x)", xy, S) == x());
  CHECK(parse_term("x(y)", xy, S) == x() * y());
  CHECK(parse_term("f", xy, S) == c(t3.f));
}

TEST_CASE("parse_term errors", "[term-lang]") {
  T3 t3;
  auto const& S = t3.S;
  auto column = [&](std::string const& text) -> std::size_t {
    try {
      parse_term(text, xy, S);
    } catch (ParseError const& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column("") == 1);
  CHECK(column("   ") == 4);
  CHECK(column("x z") == 3);
  CHECK(column("x (y") == 5);
  CHECK(column("x )") == 3);
  CHECK(column("'x") == 1);
  CHECK(column("()") == 2);
  CHECK(column("x = y") == 3);
  CHECK_THROWS_WITH(parse_term("x q", xy, S), Catch::Matchers::ContainsSubstring("q"));
}

TEST_CASE("variables shadow elements with a warning", "[term-lang]") {
  T3                             t3;
  std::vector<std::string> const vars{"e"};
  std::vector<std::string>       warnings;
  CHECK(parse_term("e a", vars, t3.S, &warnings) == x() * c(t3.a));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("\"e\"") != std::string::npos);
}

TEST_CASE("to_string inverts parse_term", "[term-lang][property]") {
  oracle::TermGenerator gen(3);
  T3                    t3;
  for (int trial = 0; trial < 2000; ++trial) {
    auto const t    = gen.term(2, t3.S.size(), 1 + gen.below(6));
    auto const text = to_string(t, t3.S, xy);
    INFO(text);
    CHECK(parse_term(text, xy, t3.S) == t);
  }
  CHECK(to_string(x() * (y() * x()), t3.S, xy) == "x (y x)");
  CHECK(to_string((x() * y()) * x(), t3.S, xy) == "x y x");
  CHECK(to_string(Term::inverse(x() * y()), t3.S, xy) == "(x y)'");
}

TEST_CASE("evaluate", "[term-lang]") {
  T3 t3;
  element_index_type const pa[] = {t3.a};
  CHECK(evaluate(t3.S, c(t3.f), pa) == t3.f);
  CHECK(evaluate(t3.S, x() * c(t3.f), pa) == t3.f);
  auto const               Z3   = catalog::z3();
  element_index_type const pg[] = {1};
  CHECK(evaluate(Z3, Term::inverse(x()), pg) == 2);
  CHECK_THROWS_AS(evaluate(t3.S, y(), pa), PreconditionError);
  element_index_type const bad[] = {7};
  CHECK_THROWS_AS(evaluate(t3.S, x(), bad), PreconditionError);
}

TEST_CASE("evaluate agrees with the naive interpreter", "[term-lang][property]") {
  oracle::TermGenerator gen(5);
  auto const            pool = sampler::small_semigroups();
  for (int trial = 0; trial < 2000; ++trial) {
    auto const& table = pool[gen.below(pool.size())];
    auto const  S     = oracle::to_semigroup(table);
    auto const  t     = gen.term(2, S.size(), gen.below(7));
    std::vector<element_index_type> p{
        static_cast<element_index_type>(gen.below(S.size())),
        static_cast<element_index_type>(gen.below(S.size()))};
    CHECK(evaluate(S, t, p) == oracle::eval(table, t, p));
  }
}

TEST_CASE("inverse stays in its component", "[term-lang][property]") {
  oracle::TermGenerator gen(9);
  auto const            sls = sampler::catalog_semilattices();
  for (int trial = 0; trial < 500; ++trial) {
    auto const& sl = sls[gen.below(sls.size())];
    auto const  t  = gen.term(1, sl.semigroup().size(), gen.below(5));
    std::vector<element_index_type> p{
        static_cast<element_index_type>(gen.below(sl.semigroup().size()))};
    CHECK(sl.component_of(evaluate(sl.semigroup(), Term::inverse(t), p))
          == sl.component_of(evaluate(sl.semigroup(), t, p)));
  }
}

TEST_CASE("constants_components", "[term-lang]") {
  T3 t3;
  CHECK(constants_components(x() * y(), t3.sl.labeling()).empty());
  CHECK(constants_components(t3.parse("x f a"), t3.sl.labeling())
        == std::vector<element_index_type>{t3.bot, t3.top});
  CHECK(constants_components(t3.parse("f f"), t3.sl.labeling())
        == std::vector<element_index_type>{t3.bot, t3.bot});
}

TEST_CASE("predicted_component", "[term-lang]") {
  T3                       t3;
  element_index_type const top[]  = {t3.top};
  element_index_type const both[] = {t3.top, t3.top};
  CHECK(predicted_component(t3.sl, t3.parse("x f"), top) == t3.bot);
  CHECK(predicted_component(t3.sl, x() * y(), both) == t3.top);
  CHECK(predicted_component(t3.sl, parse_term("x f a y", xy, t3.S), both) == t3.bot);
  CHECK(predicted_component(t3.sl, c(t3.a), {}) == t3.top);
  CHECK_THROWS_AS(predicted_component(t3.sl, x() * y(), top), PreconditionError);
}

TEST_CASE("predicted_component is exact", "[term-lang][property]") {
  oracle::TermGenerator gen(13);
  auto const            sls = sampler::catalog_semilattices();
  for (int trial = 0; trial < 1000; ++trial) {
    auto const r = sampler::lemma_trial(gen, sls, 5);
    INFO(r.description);
    CHECK(r.predicted);
  }
}

TEST_CASE("check_lemma_hom", "[term-lang]") {
  T3 t3;
  auto const w0 = check_lemma_hom(t3.sl, x(), t3.bot, t3.top, t3.a);
  CHECK(w0.pass);
  CHECK(w0.a == t3.f);
  CHECK(w0.t_a == t3.f);

  auto const w1 = check_lemma_hom(t3.sl, t3.parse("x x"), t3.bot, t3.top, t3.a);
  CHECK(w1.pass);
  CHECK(w1.t_b == t3.e);
  CHECK(w1.t_a == t3.f);
  CHECK(w1.delta == t3.top);
  CHECK(w1.gamma == t3.bot);

  auto const sl = build_strong_semilattice(
      catalog::two_level(catalog::z3(), catalog::trivial(), catalog::constant_map(3, 0)));
  for (element_index_type b = 0; b < 3; ++b) {
    CHECK(check_lemma_hom(sl, Term::inverse(x()), 1, 0, b).pass);
  }
  CHECK_THROWS_AS(check_lemma_hom(t3.sl, x() * y(), t3.bot, t3.top, t3.a),
                  PreconditionError);
  CHECK_THROWS_AS(check_lemma_hom(t3.sl, x(), t3.top, t3.bot, t3.f),
                  PreconditionError);
  CHECK_THROWS_AS(check_lemma_hom(t3.sl, x(), t3.bot, t3.top, t3.f),
                  PreconditionError);
}

TEST_CASE("check_lemma_same_component and check_lemma_collapse", "[term-lang]") {
  T3 t3;
  CHECK(check_lemma_same_component(t3.sl, t3.parse("x f"), t3.bot, t3.top, t3.a).pass);
  CHECK(check_lemma_same_component(t3.sl, c(t3.f), t3.bot, t3.top, t3.a).pass);
  CHECK(check_lemma_same_component(t3.sl, t3.parse("f x f"), t3.bot, t3.top, t3.e).pass);

  auto const w = check_lemma_collapse(t3.sl, t3.parse("x f"), t3.bot, t3.top, t3.a);
  CHECK(w.pass);
  CHECK(w.t_b == t3.f);
  CHECK(w.t_a == t3.f);
  CHECK(check_lemma_collapse(t3.sl, c(t3.f), t3.bot, t3.top, t3.a).pass);
  CHECK(check_lemma_collapse(t3.sl, t3.parse("f x x f"), t3.bot, t3.top, t3.e).pass);

  CHECK_THROWS_AS(check_lemma_collapse(t3.sl, t3.parse("x a"), t3.bot, t3.top, t3.a),
                  PreconditionError);
  CHECK_THROWS_AS(check_lemma_same_component(t3.sl, x(), t3.bot, t3.top, t3.a),
                  PreconditionError);
}

TEST_CASE("the lemmas hold on random samples", "[term-lang][property]") {
  oracle::TermGenerator gen(17);
  auto const            sls = sampler::catalog_semilattices();
  for (int trial = 0; trial < 1000; ++trial) {
    auto const r = sampler::lemma_trial(gen, sls, 5);
    INFO(r.description);
    CHECK(r.hom);
    CHECK(r.same);
    CHECK(r.collapse);
  }
}
