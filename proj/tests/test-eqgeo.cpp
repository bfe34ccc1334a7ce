// crsg - algebraic geometry over finite completely regular semigroups

#include <algorithm>  // for find
#include <set>     // for set
#include <string>  // for string
#include <vector>  // for vector

#include "catch_amalgamated.hpp"
#include "crsg/crsg.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace crsg;
using Kind = AlgebraicityVerdict::Kind;

namespace {
  std::vector<std::string> const xy{"x", "y"};

  Term x() {
    return Term::variable(0);
  }
  Term y() {
    return Term::variable(1);
  }
  Term c(element_index_type s) {
    return Term::constant(s);
  }

  PointSet points(std::size_t degree, std::size_t arity, std::vector<Point> const& ps) {
    PointSet Y(degree, arity);
    for (auto const& p : ps) {
      Y.insert(p);
    }
    return Y;
  }

  std::set<std::vector<element_index_type>> value_set(CloneClosure const& cl) {
    std::set<std::vector<element_index_type>> result;
    for (auto const& f : cl.functions) {
      result.insert(f.values);
    }
    return result;
  }
}  // namespace

TEST_CASE("PointSet", "[eqgeo]") {
  CHECK(space_size(3, 2) == 9);
  CHECK(space_size(5, 0) == 1);
  CHECK_THROWS_AS(space_size(1000, 10), PreconditionError);
  for (std::uint64_t r = 0; r < 27; ++r) {
    auto const p = unrank(r, 3, 3);
    CHECK(rank_of(p, 3) == r);
  }
  CHECK(unrank(5, 3, 2) == Point{1, 2});

  auto Y = points(3, 2, {{2, 0}, {0, 1}, {2, 0}});
  CHECK(Y.size() == 2);
  CHECK(Y.points() == std::vector<Point>{{0, 1}, {2, 0}});
  CHECK(Y.contains(Point{2, 0}));
  CHECK_FALSE(Y.contains(Point{0, 0}));
  CHECK(Y.complement_ranks().size() == 7);
  CHECK_THROWS_AS(Y.insert(Point{0}), PreconditionError);
  CHECK_THROWS_AS(Y.insert(Point{0, 3}), PreconditionError);
  CHECK_THROWS_AS(union_of(Y, PointSet(3, 1)), PreconditionError);
  CHECK_THROWS_AS(intersection_of(Y, PointSet(2, 2)), PreconditionError);
}

TEST_CASE("solve", "[eqgeo]") {
  auto const  sl = catalog::t3();
  auto const& S  = sl.semigroup();
  auto const  e = *S.index_of("e"), a = *S.index_of("a"), f = *S.index_of("f");
  CHECK(solve(S, {1, {{x(), c(a)}}}).points() == std::vector<Point>{{a}});
  CHECK(solve(S, {1, {{x() * x(), x()}}}).points() == std::vector<Point>{{e}, {f}});
  CHECK(solve(S, {2, {}}).size() == 9);
  CHECK(solve(S, {1, {{c(a), c(f)}}}).empty());
  CHECK(solve(S, {0, {}}).size() == 1);
  CHECK_THROWS_AS(solve(S, {1, {{y(), x()}}}), PreconditionError);
}

TEST_CASE("solve agrees with point-by-point filtering", "[eqgeo][property]") {
  oracle::TermGenerator gen(21);
  auto const            pool = sampler::small_semigroups();
  for (int trial = 0; trial < 300; ++trial) {
    auto const s = sampler::random_system(gen, pool, 2, 3, 4);
    CHECK(oracle::as_set(solve(s.S, s.system))
          == oracle::solve(oracle::table_of(s.S), s.system));
  }
}

TEST_CASE("solution sets are antitone and intersect", "[eqgeo][property]") {
  oracle::TermGenerator gen(23);
  auto const            pool = sampler::small_semigroups();
  for (int trial = 0; trial < 200; ++trial) {
    auto const s1 = sampler::random_system(gen, pool, 2, 3, 3);
    auto const S  = s1.S;
    EquationSystem sigma2{s1.system.arity, {}};
    for (int k = 0; k < 2; ++k) {
      sigma2.equations.push_back({gen.term(sigma2.arity, S.size(), 3),
                                  gen.term(sigma2.arity, S.size(), 3)});
    }
    auto both = s1.system;
    both.equations.insert(both.equations.end(), sigma2.equations.begin(),
                          sigma2.equations.end());
    auto const V1 = solve(S, s1.system), V2 = solve(S, sigma2), V12 = solve(S, both);
    CHECK(V12 == intersection_of(V1, V2));
    CHECK(intersection_of(V12, V1) == V12);
    CHECK(union_of(V12, PointSet(S.size(), V12.arity())) == V12);
    CHECK(union_of(V1, V2) == union_of(V2, V1));
  }
}

TEST_CASE("the union of two coordinate sets over T3", "[eqgeo]") {
  auto const  sl = catalog::t3();
  auto const& S  = sl.semigroup();
  auto const  e = *S.index_of("e"), a = *S.index_of("a"), f = *S.index_of("f");
  auto const  M  = union_of(solve(S, {2, {{x(), c(a)}}}), solve(S, {2, {{y(), c(a)}}}));
  CHECK(M == points(3, 2, {{a, e}, {a, a}, {a, f}, {e, a}, {f, a}}));
  CHECK(M == theorem2_counterexample(sl, 1, 0, a));
  CHECK(theorem2_counterexample(sl, 1, 0, e).size() == 5);

  auto const chain = build_strong_semilattice(
      catalog::two_level(catalog::trivial(), catalog::trivial(), {0}));
  CHECK(theorem2_counterexample(chain, 1, 0, 0).size() == 3);
  CHECK_THROWS_AS(theorem2_counterexample(sl, 0, 1, f), PreconditionError);
  CHECK_THROWS_AS(theorem2_counterexample(sl, 1, 0, f), PreconditionError);
}

TEST_CASE("clone_closure", "[eqgeo]") {
  CHECK(clone_closure(catalog::trivial(), 2, 100).functions.size() == 1);

  auto const z2 = clone_closure(catalog::z2(), 1, 100);
  CHECK(z2.complete);
  // id, const e, const a, x a
  CHECK(value_set(z2)
        == std::set<std::vector<element_index_type>>{{0, 1}, {0, 0}, {1, 1}, {1, 0}});

  auto const partial = clone_closure(catalog::z3(), 2, 3);
  CHECK_FALSE(partial.complete);
  CHECK(partial.functions.size() == 3);
  CHECK_THROWS_AS(clone_closure(catalog::z2(), 1, 0), PreconditionError);
  CHECK_THROWS_AS(clone_closure(catalog::null2(), 1, 10), NotCompletelyRegularError);
}

TEST_CASE("clone_closure matches the saturating enumerator", "[eqgeo][property]") {
  for (auto const& table : oracle::completely_regular_semigroups(3)) {
    auto const S = oracle::to_semigroup(table);
    for (std::size_t n = 0; n <= 2; ++n) {
      auto const expected = oracle::enumerate_clone(table, n, 8);
      auto const cl       = clone_closure(S, n, default_cap(S.size(), n));
      REQUIRE(cl.complete);
      CHECK(expected.saturated);
      CHECK(value_set(cl) == expected.functions);
    }
  }
}

TEST_CASE("clone witnesses realise their functions", "[eqgeo][property]") {
  for (auto const& table : sampler::small_semigroups()) {
    auto const S = oracle::to_semigroup(table);
    for (std::size_t n = 1; n <= 2; ++n) {
      auto const cl   = clone_closure(S, n, default_cap(S.size(), n));
      auto const pts  = oracle::all_points(S.size(), n);
      for (auto const& f : cl.functions) {
        REQUIRE(f.witness);
        for (std::size_t r = 0; r < pts.size(); ++r) {
          CHECK(oracle::eval(table, *f.witness, pts[r]) == f.values[r]);
        }
      }
    }
  }
}

TEST_CASE("clone witnesses have minimal depth", "[eqgeo][property]") {
  for (auto const& S : {catalog::t3().semigroup(), catalog::z3(),
                        catalog::rectangular_band(2, 2)}) {
    auto const table = oracle::table_of(S);
    auto const cl    = clone_closure(S, 1, 1000);
    REQUIRE(cl.complete);
    std::vector<std::set<std::vector<element_index_type>>> by_depth;
    for (std::size_t d = 0; d <= 8; ++d) {
      by_depth.push_back(oracle::enumerate_clone(table, 1, d).functions);
    }
    for (auto const& f : cl.functions) {
      std::size_t d = 0;
      while (!by_depth[d].contains(f.values)) {
        ++d;
      }
      CHECK(f.witness->depth() == d);
    }
  }
}

TEST_CASE("decide_algebraic", "[eqgeo]") {
  auto const  sl = catalog::t3();
  auto const& S  = sl.semigroup();
  auto const  e = *S.index_of("e"), a = *S.index_of("a"), f = *S.index_of("f");

  SECTION("singleton") {
    auto const Y = points(3, 1, {{a}});
    auto const v = decide_algebraic(S, Y, 1000);
    REQUIRE(v.kind == Kind::algebraic);
    CHECK(solve(S, v.witness) == Y);
    CHECK(v.witness.equations.size() == 1);
  }
  SECTION("everything") {
    auto const v = decide_algebraic(S, PointSet::all(3, 2), 1000);
    CHECK(v.kind == Kind::algebraic);
    CHECK(v.witness.equations.empty());
  }
  SECTION("idempotents") {
    auto const Y = solve(S, {1, {{x() * x(), x()}}});
    auto const v = decide_algebraic(S, Y, 1000);
    REQUIRE(v.kind == Kind::algebraic);
    CHECK(solve(S, v.witness) == Y);
  }
  SECTION("M is not algebraic") {
    auto const M = theorem2_counterexample(sl, 1, 0, a);
    auto const v = decide_algebraic(S, M, 10000);
    REQUIRE(v.kind == Kind::not_algebraic);
    CHECK(v.complete);
    CHECK(v.stuck_points
          == std::vector<Point>{{e, e}, {e, f}, {f, e}, {f, f}});
    CHECK(std::find(v.stuck_points.begin(), v.stuck_points.end(), Point{f, f})
          != v.stuck_points.end());
  }
  SECTION("the empty set") {
    // f = a has no solution, so the empty set is algebraic over T3
    auto const v = decide_algebraic(S, PointSet(3, 1), 1000);
    REQUIRE(v.kind == Kind::algebraic);
    CHECK(solve(S, v.witness).empty());
  }
  SECTION("the empty set over the trivial semigroup") {
    // Over the trivial semigroup every equation holds everywhere.
    auto const v = decide_algebraic(catalog::trivial(), PointSet(1, 1), 1000);
    CHECK(v.kind == Kind::not_algebraic);
    CHECK(v.stuck_points == std::vector<Point>{{0}});
  }
  SECTION("cap") {
    auto const M = theorem2_counterexample(sl, 1, 0, a);
    auto const v = decide_algebraic(S, M, 2);
    CHECK(v.kind == Kind::unknown);
    CHECK_FALSE(v.complete);
    CHECK(v.closure_size == 2);
  }
  SECTION("degree mismatch") {
    CHECK_THROWS_AS(decide_algebraic(S, PointSet(4, 1), 10), PreconditionError);
  }
}

TEST_CASE("solution sets are algebraic and witnesses replay", "[eqgeo][property]") {
  oracle::TermGenerator gen(29);
  auto const            pool = sampler::small_semigroups();
  for (int trial = 0; trial < 200; ++trial) {
    auto const s = sampler::random_system(gen, pool, 2, 3, 4);
    auto const Y = solve(s.S, s.system);
    auto const v = decide_algebraic(s.S, Y);
    REQUIRE(v.kind == Kind::algebraic);
    CHECK(solve(s.S, v.witness) == Y);
  }
}

TEST_CASE("NotAlgebraic verdicts are complete and stuck points are exact",
          "[eqgeo][property]") {
  // A stuck point p satisfies every equation valid on Y: equivalently, no two
  // clone functions agree on Y and differ at p.
  oracle::TermGenerator gen(31);
  auto const            S     = catalog::t3().semigroup();
  auto const            table = oracle::table_of(S);
  auto const            clone = oracle::enumerate_clone(table, 1, 8);
  for (unsigned mask = 0; mask < 8; ++mask) {
    PointSet Y(3, 1);
    for (element_index_type s = 0; s < 3; ++s) {
      if (mask & (1u << s)) {
        Y.insert(Point{s});
      }
    }
    auto const v = decide_algebraic(S, Y, 1000);
    if (v.kind == Kind::not_algebraic) {
      CHECK(v.complete);
    }
    for (element_index_type p = 0; p < 3; ++p) {
      if (Y.contains(Point{p})) {
        continue;
      }
      bool separated = false;
      for (auto const& g : clone.functions) {
        for (auto const& h : clone.functions) {
          bool agree = true;
          for (auto r : Y.ranks()) {
            agree = agree && g[r] == h[r];
          }
          separated = separated || (agree && g[p] != h[p]);
        }
      }
      bool const stuck = std::find(v.stuck_points.begin(), v.stuck_points.end(),
                                   Point{p})
                         != v.stuck_points.end();
      CHECK(stuck == !separated);
    }
  }
}

TEST_CASE("verify_theorem2", "[eqgeo]") {
  auto const t3 = verify_theorem2(catalog::t3(), 100000);
  CHECK(t3.pass());
  CHECK(t3.cases.size() == 2);
  CHECK(t3.not_algebraic == 2);
  for (auto const& cs : t3.cases) {
    CHECK(cs.predicted_point_stuck);
  }

  auto const chain = verify_theorem2(
      build_strong_semilattice(
          catalog::two_level(catalog::trivial(), catalog::trivial(), {0})),
      100000);
  CHECK(chain.pass());
  CHECK(chain.cases.size() == 1);

  CHECK_THROWS_AS(verify_theorem2(build_strong_semilattice(StrongSemilatticeSpec{
                                      catalog::trivial("w"), {catalog::z3()}, {}}),
                                  1000),
                  PreconditionError);
}

TEST_CASE("Theorem 2 holds across the catalog", "[eqgeo][property]") {
  for (auto const& s : catalog::all_specs()) {
    if (s.spec.omega.size() < 2) {
      continue;
    }
    INFO(s.name);
    auto const sl = build_strong_semilattice(s.spec);
    auto const r  = verify_theorem2(sl, default_cap(sl.semigroup().size(), 2));
    CHECK(r.pass());
    CHECK(r.unknown == 0);
    for (auto const& cs : r.cases) {
      CHECK(cs.verdict.complete);
      CHECK(cs.predicted_point_stuck);
    }
  }
}

TEST_CASE("ed_probe", "[eqgeo]") {
  auto const  sl = catalog::t3();
  auto const& S  = sl.semigroup();
  auto const  a  = *S.index_of("a");
  auto const  Vx = solve(S, {2, {{x(), c(a)}}});
  auto const  Vy = solve(S, {2, {{y(), c(a)}}});

  auto const r = ed_probe(S, {Vx, Vy}, 10000);
  CHECK(r.certifies_not_ed());
  CHECK(*r.union_set == theorem2_counterexample(sl, 1, 0, a));

  auto const single = ed_probe(S, {Vx}, 10000);
  REQUIRE(single.union_verdict);
  CHECK(single.union_verdict->kind == Kind::algebraic);

  auto const Z2 = catalog::z2();
  auto const z  = ed_probe(Z2, {points(2, 1, {{0}}), points(2, 1, {{1}})}, 1000);
  REQUIRE(z.union_verdict);
  CHECK(z.union_verdict->kind == Kind::algebraic);
  CHECK(z.union_set->size() == 2);

  auto const bad = ed_probe(S, {Vx, theorem2_counterexample(sl, 1, 0, a)}, 10000);
  CHECK(bad.non_algebraic_input == 1);
  CHECK_FALSE(bad.union_verdict);
}
