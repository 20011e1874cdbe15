#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symq/perm.hpp"

using namespace symq::perm;

namespace {

Permutation P(std::string_view s, std::size_t n) { return Permutation::parse(s, n); }

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Permutation> out;
  for (auto& img : oracle::all_permutations(n)) out.emplace_back(img);
  return out;
}

std::vector<oracle::Images> images_of(const PermTuple& t) {
  std::vector<oracle::Images> out;
  for (const auto& e : t.entries()) out.emplace_back(e.images().begin(), e.images().end());
  return out;
}

}  // namespace

TEST_CASE("permutation parse, print and algebra") {
  auto p = P("(0 1)(2 3)", 5);
  CHECK(p.to_string() == "(0 1)(2 3)");
  CHECK(P("()", 3).is_identity());
  CHECK(Permutation::identity(4).to_string() == "()");
  CHECK(P("(2 0 1)", 3).to_string() == "(0 1 2)");
  CHECK(p.order() == 2);
  CHECK(p.support() == std::vector<Point>{0, 1, 2, 3});
  // Right action: x(pq) = (xp)q.
  auto a = P("(0 1)", 3), b = P("(1 2)", 3);
  CHECK((a * b)(0) == b(a(0)));
  CHECK((a * b).to_string() == "(0 2 1)");
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(P("(0 5)", 3), symq::Error);
  CHECK_THROWS_AS(P("(0 1)(1 2)", 3), symq::Error);
  CHECK_THROWS_AS(P("(0 1", 3), symq::Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), symq::Error);
}

TEST_CASE("tuple parse round trip") {
  auto t = PermTuple::parse("(0 1 2), (), (3 4)", 5);
  CHECK(t.arity() == 3);
  CHECK(PermTuple::parse(t.to_string(), 5) == t);
  CHECK(t.support() == std::vector<Point>{0, 1, 2, 3, 4});
  CHECK(PermTuple::parse("", 4).arity() == 0);
}

TEST_CASE("orbits") {
  CHECK(orbits(PermTuple::identity(4, 1)) == std::vector<std::vector<Point>>{{0}, {1}, {2}, {3}});
  CHECK(orbits(PermTuple::parse("(0 1)(2 3)", 5)) == std::vector<std::vector<Point>>{{0, 1}, {2, 3}, {4}});
  CHECK(orbits(PermTuple::parse("(0 1 2 3 4), (0 1)(3 4)", 5)).size() == 1);
  CHECK(orbits(PermTuple::parse("(0 3), (3 1)", 5)) == std::vector<std::vector<Point>>{{0, 1, 3}, {2}, {4}});
}

TEST_CASE("canonical type basics") {
  auto a = PermTuple::parse("(0 1 2)", 8);
  auto b = PermTuple::parse("(5 7 6)", 8);
  auto ta = canonical_type(a, {0, 1, 2});
  CHECK(ta == canonical_type(b, {5, 6, 7}));
  CHECK(ta.degree == 3);
  CHECK(ta.certificate == std::vector<std::uint16_t>{1, 2, 0});
  // Re-canonicalizing a certificate is the identity.
  auto re = canonical_type(ta.to_tuple(), {0, 1, 2});
  CHECK(re == ta);
  CHECK_THROWS_AS(canonical_type(a, {0, 1}), symq::Error);
  CHECK_THROWS_AS(canonical_type(a, {0, 1, 2, 3}), symq::Error);
  // Swapping generators of different orders changes the type.
  auto g = PermTuple::parse("(0 1 2), (0 1)", 3);
  auto h = PermTuple::parse("(0 1), (0 1 2)", 3);
  CHECK(canonical_type(g, {0, 1, 2}) != canonical_type(h, {0, 1, 2}));
}

TEST_CASE("canonical type agrees with brute-force isomorphism on transitive pairs, degree <= 4") {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto perms = all_perms(m);
    std::vector<Point> all(m);
    std::iota(all.begin(), all.end(), Point{0});
    std::vector<std::pair<PermTuple, OrbitType>> transitive;
    for (const auto& x : perms)
      for (const auto& y : perms) {
        PermTuple t(m, {x, y});
        if (orbits(t).size() == 1) transitive.emplace_back(t, canonical_type(t, all));
      }
    for (std::size_t i = 0; i < transitive.size(); ++i)
      for (std::size_t j = i; j < transitive.size(); ++j) {
        bool iso = oracle::actions_isomorphic(images_of(transitive[i].first), images_of(transitive[j].first));
        CHECK(iso == (transitive[i].second == transitive[j].second));
      }
  }
}

TEST_CASE("canonical type is invariant under 1000 random relabelings") {
  std::mt19937 rng(7);
  auto t = PermTuple::parse("(0 1 2 3 4)(5 6), (0 1)(3 4)(5 6)", 9);
  const auto orbit_list = orbits(t);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Point> img(9);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    Permutation h(img);
    auto u = t.conjugate(h);
    for (const auto& orb : orbit_list) {
      std::vector<Point> moved;
      for (Point p : orb) moved.push_back(h(p));
      std::sort(moved.begin(), moved.end());
      REQUIRE(canonical_type(u, moved) == canonical_type(t, orb));
    }
  }
}

TEST_CASE("census conventions and counts") {
  auto t = PermTuple::parse("(0 1)(2 3)", 5);
  auto inc = census(t);
  auto two = canonical_type(PermTuple::parse("(0 1)", 2), {0, 1});
  CHECK(inc.count(two) == 2);
  CHECK(inc.count(trivial_type(1)) == 1);
  CHECK(inc.weight() == 5);
  auto exc = census(t, TrivialConvention::kExclude);
  CHECK(exc.counts().size() == 1);
  CHECK(exc.count(two) == 2);
  CHECK(inc.to_string().find("cycles: 2^2 1^1") != std::string::npos);

  std::set<Census> seen;
  for (const auto& p : all_perms(4)) seen.insert(census(PermTuple(4, {p})));
  CHECK(seen.size() == oracle::partitions(4));
  CHECK(seen.size() == 5);

  Census bad(1, TrivialConvention::kExclude);
  CHECK_THROWS_AS(bad.add(trivial_type(1)), symq::Error);
}

TEST_CASE("census equality iff a conjugator exists: exhaustive, 4 points, arity <= 2") {
  const std::size_t n = 4;
  auto perms = all_perms(n);
  std::vector<PermTuple> tuples;
  for (const auto& x : perms) tuples.emplace_back(n, std::vector<Permutation>{x});
  for (const auto& x : perms)
    for (const auto& y : perms) tuples.emplace_back(n, std::vector<Permutation>{x, y});
  std::vector<Census> cens;
  std::vector<std::vector<oracle::Images>> imgs;
  for (const auto& t : tuples) {
    cens.push_back(census(t));
    imgs.push_back(images_of(t));
  }
  std::size_t checked = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      const auto& a = tuples[i];
      const auto& b = tuples[j];
      if (a.arity() != b.arity()) continue;
      bool same = cens[i] == cens[j];
      auto brute = oracle::brute_conjugator(imgs[i], imgs[j], n);
      REQUIRE(same == brute.has_value());
      auto w = tuples_conjugate(a, b);
      REQUIRE(w.has_value() == same);
      if (w) REQUIRE(a.conjugate(*w) == b);
      ++checked;
    }
  CHECK(checked == 24 * 24 + 576 * 576);
  CHECK(tuples_conjugate(tuples[5], tuples[5])->is_identity());
  auto id = tuples_conjugate(PermTuple::parse("(0 1 2)", 5), PermTuple::parse("(2 3 4)", 5));
  CHECK(id.has_value());
}

TEST_CASE("realize round trips") {
  auto five = census(PermTuple::parse("(0 1 2 3 4)", 5));
  CHECK(realize(five, 5) == PermTuple::parse("(0 1 2 3 4)", 5));
  auto c = census(PermTuple::parse("(0 1)(2 3)", 5));
  CHECK(census(realize(c, 5)) == c);
  CHECK_THROWS_AS(realize(c, 4), symq::Error);
  CHECK_THROWS_AS(realize(c, 6), symq::Error);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 8;
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    PermTuple t(n, gens);
    for (auto conv : {TrivialConvention::kInclude, TrivialConvention::kExclude}) {
      auto cen = census(t, conv);
      REQUIRE(census(realize(cen, n), conv) == cen);
      if (conv == TrivialConvention::kExclude) REQUIRE(census(realize(cen, n + 3), conv) == cen);
    }
  }
}

TEST_CASE("census reindex agrees with direct census of reindexed tuples") {
  auto f = PermTuple::parse("(0 1 2)(3 4)", 5);
  auto c = census(f);
  CHECK(census_reindex(c, {0}) == c);
  auto fid = PermTuple(5, {f[0], Permutation::identity(5)});
  CHECK(census_reindex(census(fid), {0}) == c);
  CHECK_THROWS_AS(census_reindex(c, {1}), symq::Error);

  const std::vector<CoordMap> maps{{0},      {1},    {1, 0},         {0, 0},          {0, 1, 0},
                                   {1, 1, 0}, {0, kIdentityCoord}, {kIdentityCoord}, {}};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto perms = all_perms(n);
    for (const auto& x : perms)
      for (const auto& y : perms) {
        PermTuple t(n, {x, y});
        for (auto conv : {TrivialConvention::kInclude, TrivialConvention::kExclude})
          for (const auto& m : maps) REQUIRE(census_reindex(census(t, conv), m) == census(reindex(t, m), conv));
      }
  }
}

TEST_CASE("coordinate permutations act bijectively on censuses") {
  std::set<Census> before, after;
  for (const auto& x : all_perms(4))
    for (const auto& y : all_perms(4)) {
      auto c = census(PermTuple(4, {x, y}));
      before.insert(c);
      auto s = census_reindex(c, {1, 0});
      CHECK(s.weight() == c.weight());
      CHECK(census_reindex(s, {1, 0}) == c);
      after.insert(s);
    }
  CHECK(before == after);
}

TEST_CASE("restrict and pointwise product") {
  auto t = PermTuple::parse("(0 1)(2 3 4), (0 1)", 6);
  CHECK(restrict(t, {}).is_identity());
  CHECK(restrict(t, {2, 3, 4}) == PermTuple::parse("(2 3 4), ()", 6));
  CHECK_THROWS_AS(restrict(t, {0, 2}), symq::Error);

  std::vector<Permutation> inv;
  for (const auto& e : t.entries()) inv.push_back(e.inverse());
  CHECK(pointwise_product(t, PermTuple(6, inv)).is_identity());

  auto a = PermTuple::parse("(0 1 2), (0 1)", 7);
  auto b = PermTuple::parse("(3 4)(5 6), (3 5)", 7);
  auto sum = census(a, TrivialConvention::kExclude);
  auto cb = census(b, TrivialConvention::kExclude);
  for (const auto& [type, k] : cb.counts()) sum.add(type, k);
  CHECK(census(pointwise_product(a, b), TrivialConvention::kExclude) == sum);
}
