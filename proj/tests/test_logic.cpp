#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "symq/alt5.hpp"
#include "symq/formula_library.hpp"
#include "symq/group_formula.hpp"
#include "symq/m_library.hpp"
#include "symq/m_model.hpp"
#include "symq/translate.hpp"

using namespace symq;
using namespace symq::logic;
using perm::Permutation;
using perm::PermTuple;
using K = GroupFormula::Kind;

namespace {

std::vector<Permutation> sym(std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& p : oracle::all_permutations(n)) out.emplace_back(p);
  return out;
}

// Plain recursive semantics over image vectors: p*q applies p, then q.
using Env = std::vector<oracle::Images>;

oracle::Images compose(const oracle::Images& p, const oracle::Images& q) {
  oracle::Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

bool is_identity(const oracle::Images& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

bool naive_eval(const GroupFormula& f, std::size_t n, Env& env) {
  const auto& v = f.vars();
  const auto& c = f.children();
  auto need = [&](Var x) {
    if (env.size() <= x) env.resize(x + 1);
  };
  for (Var x : v) need(x);
  switch (f.kind()) {
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kEq: return env[v[0]] == env[v[1]];
    case K::kMul: return compose(env[v[0]], env[v[1]]) == env[v[2]];
    case K::kIsOne: return is_identity(env[v[0]]);
    case K::kNot: return !naive_eval(c[0], n, env);
    case K::kAnd:
      for (const auto& g : c)
        if (!naive_eval(g, n, env)) return false;
      return true;
    case K::kOr:
      for (const auto& g : c)
        if (naive_eval(g, n, env)) return true;
      return false;
    case K::kImplies: return !naive_eval(c[0], n, env) || naive_eval(c[1], n, env);
    case K::kIff: return naive_eval(c[0], n, env) == naive_eval(c[1], n, env);
    case K::kExists:
    case K::kForall: {
      const bool want = f.kind() == K::kExists;
      const auto saved = env[v[0]];
      bool result = !want;
      for (const auto& p : oracle::cached_permutations(n)) {
        env[v[0]] = p;
        if (naive_eval(c[0], n, env) == want) {
          result = want;
          break;
        }
      }
      env[v[0]] = saved;
      return result;
    }
  }
  return false;
}

// Random formulas over x0..x{vars-1}, with at most `quant` nested quantifiers.
GroupFormula random_formula(std::mt19937_64& rng, int depth, Var vars, int quant) {
  auto pick = [&](std::uint64_t n) { return rng() % n; };
  auto var = [&] { return static_cast<Var>(pick(vars)); };
  if (depth == 0 || pick(4) == 0) {
    switch (pick(5)) {
      case 0: return GroupFormula::eq(var(), var());
      case 1: return GroupFormula::is_one(var());
      case 2:
      case 3: return GroupFormula::mul(var(), var(), var());
      default: return GroupFormula::truth(pick(2) == 0);
    }
  }
  auto sub = [&] { return random_formula(rng, depth - 1, vars, quant); };
  switch (pick(quant > 0 ? 7 : 5)) {
    case 0: return GroupFormula::negate(sub());
    case 1: {
      std::vector<GroupFormula> fs(2 + pick(2));
      for (auto& g : fs) g = sub();
      return GroupFormula::all(std::move(fs));
    }
    case 2: {
      std::vector<GroupFormula> fs(2 + pick(2));
      for (auto& g : fs) g = sub();
      return GroupFormula::any(std::move(fs));
    }
    case 3: return GroupFormula::implies(sub(), sub());
    case 4: return GroupFormula::iff(sub(), sub());
    default: {
      const Var b = vars;
      auto body = random_formula(rng, depth - 1, vars + 1, quant - 1);
      return pick(2) ? GroupFormula::exists(b, body) : GroupFormula::forall(b, body);
    }
  }
}

std::string syntax_error_of(std::string_view text) {
  try {
    parse_group_formula(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  auto f = parse_group_formula("x0 = x1");
  CHECK(f.kind() == K::kEq);
  CHECK(f.vars() == std::vector<Var>{0, 1});

  f = parse_group_formula("E x1 (x0*x1 = x2)");
  REQUIRE(f.kind() == K::kExists);
  CHECK(f.bound() == 1);
  CHECK(f.children()[0] == GroupFormula::mul(0, 1, 2));

  f = parse_group_formula("x0 = 1 | x1 = 1 & x2 = 1");
  REQUIRE(f.kind() == K::kOr);
  CHECK(f.children()[1].kind() == K::kAnd);

  f = parse_group_formula("x0 = 1 -> x1 = 1 -> x2 = 1");
  REQUIRE(f.kind() == K::kImplies);
  CHECK(f.children()[1].kind() == K::kImplies);

  f = parse_group_formula("x0 = 1 <-> x1 = 1 <-> x2 = 1");
  REQUIRE(f.kind() == K::kIff);
  CHECK(f.children()[0].kind() == K::kIff);

  CHECK(parse_group_formula("x0 != x1") == GroupFormula::negate(GroupFormula::eq(0, 1)));
  CHECK(parse_group_formula("1 = x3") == GroupFormula::is_one(3));
  CHECK(parse_group_formula("x1 = x0*x2") == GroupFormula::mul(0, 2, 1));
}

TEST_CASE("long products are flattened through fresh variables") {
  // x0*x1 = x1*x0 needs one witness for the common value.
  auto f = parse_group_formula("x0*x1 = x1*x0");
  REQUIRE(f.kind() == K::kExists);
  CHECK(f.bound() == 2);
  CHECK(free_vars(f) == std::set<Var>{0, 1});
  for (std::size_t n : {3u, 4u}) {
    const auto perms = sym(n);
    for (const auto& a : perms)
      for (const auto& b : perms)
        CHECK(eval_group(f, n, PermTuple(n, {a, b})) == (a * b == b * a));
  }
  // Three factors: x0*x1*x2 = 1 exactly when the product is the identity.
  auto g = parse_group_formula("x0*x1*x2 = 1");
  CHECK(free_vars(g) == std::set<Var>{0, 1, 2});
  const auto perms = sym(3);
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms) CHECK(eval_group(g, 3, PermTuple(3, {a, b, c})) == (a * b * c).is_identity());
}

TEST_CASE("syntax errors report their column") {
  CHECK(syntax_error_of("x0 = x1 &") == "formula syntax error at column 10: expected a formula");
  CHECK(syntax_error_of("E x1 x0 = x1").find("column 6") != std::string::npos);
  CHECK(syntax_error_of("x0 = x1)").find("column 8") != std::string::npos);
  CHECK(syntax_error_of("x0 ? x1").find("column 4") != std::string::npos);
  CHECK(syntax_error_of("(x0 = x1").find("column 9") != std::string::npos);
  CHECK(syntax_error_of("y0 = x1").find("column 1") != std::string::npos);
}

TEST_CASE("render and parse round-trip on a random corpus") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(rng, 4, 3, 2);
    const auto text = render(f);
    CAPTURE(text);
    const auto g = parse_group_formula(text);
    CHECK(g == f);
    CHECK(render(g) == text);
  }
}

TEST_CASE("eval_group agrees with plain recursive evaluation") {
  std::mt19937_64 rng(77);
  const auto perms = oracle::all_permutations(3);
  for (int i = 0; i < 60; ++i) {
    const auto f = random_formula(rng, 3, 2, 2);
    CAPTURE(render(f));
    for (std::size_t a = 0; a < perms.size(); a += 2)
      for (std::size_t b = 1; b < perms.size(); b += 2) {
        Env env{perms[a], perms[b]};
        CHECK(eval_group(f, 3, PermTuple(3, {Permutation(perms[a]), Permutation(perms[b])})) ==
              naive_eval(f, 3, env));
      }
  }
}

TEST_CASE("eval_group worked examples") {
  const auto inverse = parse_group_formula("E x1 (x0*x1 = 1)");
  const auto central = parse_group_formula("A x1 (x0*x1 = x1*x0)");
  for (std::size_t n : {3u, 4u}) {
    for (const auto& p : sym(n)) {
      const PermTuple t(n, {p});
      CHECK(eval_group(inverse, n, t));
      CHECK(eval_group(central, n, t) == p.is_identity());
    }
    const PermTuple transposition(n, {Permutation::from_cycles(n, {{0, 1}})});
    CHECK_FALSE(eval_group(parse_group_formula("x0 = 1"), n, transposition));
  }
  CHECK_THROWS_AS(eval_group(parse_group_formula("x0 = x1"), 3, PermTuple(3, {Permutation::identity(3)})), Error);
}

TEST_CASE("diag over A(5) has one conjunct per ordered pair") {
  const auto f = formula_library("diag");
  REQUIRE(f.kind() == K::kAnd);
  CHECK(f.children().size() == 60 * 60);
  const auto& g = alt5::a5_table();
  std::set<std::pair<Var, Var>> pairs;
  for (const auto& c : f.children()) {
    REQUIRE(c.kind() == K::kMul);
    const auto& v = c.vars();
    pairs.emplace(v[0], v[1]);
    CHECK(g.element(static_cast<alt5::Elem>(v[0])) * g.element(static_cast<alt5::Elem>(v[1])) ==
          g.element(static_cast<alt5::Elem>(v[2])));
  }
  CHECK(pairs.size() == 3600);
}

TEST_CASE("diag holds of every coset action of A(5)") {
  const auto f = formula_library("diag");
  const auto& g = alt5::a5_table();
  for (const auto& h : alt5::all_subgroups(g)) {
    const auto act = alt5::coset_action(g, h);
    CHECK(eval_group(f, act.degree(), act.action));
  }
  // Swapping two generators breaks it.
  const auto act = alt5::coset_action(g, alt5::closure(g, {}));
  auto entries = act.action.entries();
  std::swap(entries[1], entries[2]);
  CHECK_FALSE(eval_group(f, act.degree(), PermTuple(act.degree(), entries)));
}

TEST_CASE("small library formulas") {
  const auto set = formula_library("set");
  CHECK(free_vars(set) == std::set<Var>{0});
  CHECK(set == parse_group_formula("x0*x0 = 1"));

  // disj(x0, x1) opens with eight existentials x2..x9.
  auto f = formula_library("disj");
  std::vector<Var> leading;
  while (f.kind() == K::kExists) {
    leading.push_back(f.bound());
    f = f.children()[0];
  }
  CHECK(leading == std::vector<Var>{2, 3, 4, 5, 6, 7, 8, 9});

  // comm(x, y) for n = 1 is x0*x1 = x1*x0.
  CHECK(formula_library("comm") == parse_group_formula("x0*x1 = x1*x0"));
  CHECK(formula_library("eq") == GroupFormula::eq(0, 1));
  CHECK(formula_library("prod") == GroupFormula::mul(0, 1, 2));
  CHECK(formula_library("is_one_n", {.n = 2}) == parse_group_formula("x0 = 1 & x1 = 1"));
  CHECK_THROWS_AS(formula_library("nonsense"), Error);
  CHECK_THROWS_AS(formula_library("set", {.n = 1, .args = {0, 1}}), Error);
}

TEST_CASE("library formulas have exactly the stated free variables") {
  for (const auto& name : library_names()) {
    for (std::size_t n : {1u, 2u}) {
      CAPTURE(name);
      CAPTURE(n);
      const auto k = library_arity(name, n);
      const auto f = formula_library(name, {.n = n});
      std::set<Var> want;
      for (Var i = 0; i < k; ++i) want.insert(i);
      // proj_n only constrains the first n entries of its longer tuple.
      if (name == "proj_n") want.erase(static_cast<Var>(n));
      CHECK(free_vars(f) == want);
      CHECK(dag_size(f) < 2'000'000);
    }
  }
  // Shared subformulas keep disj compact although its unfolded tree is huge.
  const auto d = formula_library("disj");
  CHECK(tree_size(d) > 1'000'000ull);
  CHECK(dag_size(d) * 10 < tree_size(d));
}

TEST_CASE("transposition sentence") {
  const auto s = formula_library("transposition");
  CHECK(free_vars(s).empty());
  for (std::size_t n : {3u, 4u, 5u}) CHECK(eval_group(s, n, PermTuple(n, {})));
  // The body picks out transpositions once there are five points.
  REQUIRE(s.kind() == K::kExists);
  const auto body = s.children()[0];
  for (const auto& p : sym(5)) CHECK(eval_group(body, 5, PermTuple(5, {p})) == (p.support().size() == 2));
}

TEST_CASE("model sorts match brute-force enumeration") {
  CHECK(build_m_fin(4, 1)->censuses(1).size() == oracle::partitions(4));
  CHECK(build_m_fin(5, 1)->censuses(1).size() == oracle::partitions(5));
  CHECK(build_m_fin(4, 1)->types(1).size() == 4);

  for (auto [omega, n] : {std::pair{3u, 1u}, {3u, 2u}, {4u, 1u}, {4u, 2u}}) {
    CAPTURE(omega);
    CAPTURE(n);
    const auto model = build_m_fin(omega, n);
    const auto perms = sym(omega);
    std::set<perm::Census> seen;
    std::vector<Permutation> entries(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= perms.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (auto& e : entries) {
        e = perms[r % perms.size()];
        r /= perms.size();
      }
      seen.insert(perm::census(PermTuple(omega, entries)));
    }
    CHECK(model->censuses(n).size() == seen.size());
  }

  // Transitive pairs on up to three points, up to isomorphism.
  std::vector<std::vector<oracle::Images>> reps;
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto perms = oracle::all_permutations(d);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        std::set<std::uint32_t> reach{0};
        std::vector<std::uint32_t> stack{0};
        while (!stack.empty()) {
          auto x = stack.back();
          stack.pop_back();
          for (auto y : {a[x], b[x]})
            if (reach.insert(y).second) stack.push_back(y);
        }
        if (reach.size() != d) continue;
        std::vector<oracle::Images> act{a, b};
        if (std::none_of(reps.begin(), reps.end(), [&](const auto& r) { return oracle::actions_isomorphic(r, act); }))
          reps.push_back(act);
      }
  }
  CHECK(build_m_fin(3, 2)->types(2).size() == reps.size());
}

TEST_CASE("model relations on censuses") {
  const auto model = build_m_fin(4, 3);
  const auto perms = sym(4);
  for (const auto& f : perms)
    for (const auto& g : perms) {
      const auto h = model->census_id(perm::census(PermTuple(4, {f, g})));
      CHECK(model->eq(h, false) == (f == g));
      CHECK(model->proj(2, h) == model->census_id(perm::census(PermTuple(4, {f}))));
      CHECK(model->reindex(2, h, {1, 0}) == model->census_id(perm::census(PermTuple(4, {g, f}))));
      const auto fg = model->census_id(perm::census(PermTuple(4, {f, g, f * g})));
      CHECK(model->prod(fg, false));
      CHECK(model->prod(fg, true));
    }
  const auto small = build_m_fin(3, 3);
  const auto p3 = sym(3);
  for (const auto& f : p3)
    for (const auto& g : p3)
      for (const auto& h : p3)
        CHECK(small->prod(small->census_id(perm::census(PermTuple(3, {f, g, h}))), false) == (f * g == h));
}

TEST_CASE("type relations read the certificate") {
  const auto model = build_m_fin(4, 3);
  for (std::uint32_t id = 0; id < model->types(2).size(); ++id) {
    const auto t = model->types(2)[id].to_tuple();
    CHECK(model->eq1(2, id, {0, 1}) == (t[0] == t[1]));
  }
  for (std::uint32_t id = 0; id < model->types(3).size(); ++id) {
    const auto t = model->types(3)[id].to_tuple();
    CHECK(model->prod1(3, id, {0, 1, 2}) == (t[0] * t[1] == t[2]));
  }
}

TEST_CASE("translate compiles atoms through reindexing") {
  CHECK(render(translate(parse_group_formula("x0 = x1"), 2)) == "(Eq y0)");
  CHECK(render(translate(parse_group_formula("x1 = x0"), 2)) == "(Eq (reindex y0 1 0))");
  CHECK(render(translate(parse_group_formula("x0*x0 = x0"), 1)) == "(Prod (reindex y0 0 0 0))");
  CHECK(render(translate(parse_group_formula("x0 = 1"), 1)) == "(Eq (reindex y0 0 id))");
  CHECK(render(translate(parse_group_formula("E x1 (x0*x1 = x0)"), 1)) ==
        "(exists (y1 F2) (and (Prod (reindex y1 0 1 0)) (= (proj y1) y0)))");
  CHECK(render(translate(parse_group_formula("x0 = x1"), 2, {.weighted = true})) == "(EqW y0)");
  CHECK_THROWS_AS(translate(parse_group_formula("x0 = x2"), 2), Error);
}

TEST_CASE("translate is homomorphic on connectives") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_formula(rng, 3, 2, 1);
    const auto b = random_formula(rng, 3, 2, 1);
    CHECK(translate(GroupFormula::negate(a), 2) == MFormula::negate(translate(a, 2)));
    CHECK(translate(GroupFormula::all({a, b}), 2) == MFormula::all({translate(a, 2), translate(b, 2)}));
    CHECK(translate(GroupFormula::implies(a, b), 2) == MFormula::implies(translate(a, 2), translate(b, 2)));
    CHECK(translate(GroupFormula::forall(2, a), 2) ==
          MFormula::negate(translate(GroupFormula::exists(2, GroupFormula::negate(a)), 2)));
  }
}

TEST_CASE("check_translation worked examples") {
  auto r = check_translation(parse_group_formula("x0 = x1"), 2, 4);
  CHECK(r.pass());
  CHECK(std::count(r.facts.begin(), r.facts.end(), std::pair<std::string, std::string>{"assignments", "576"}) == 1);
  CHECK(std::count(r.facts.begin(), r.facts.end(), std::pair<std::string, std::string>{"agree", "576"}) == 1);
  CHECK(check_translation(parse_group_formula("E x1 (x0*x1 = x0*x0)"), 1, 3).pass());
  CHECK(check_translation(parse_group_formula("!(x0 = 1) & E x1 (x1*x1 = x0)"), 1, 4).pass());
  CHECK(check_translation(parse_group_formula("A x1 (x0*x1 = x1*x0)"), 1, 4).pass());
  CHECK(check_translation(parse_group_formula("E x1 (x1 != 1 & x1*x1 = 1)"), 0, 3).pass());

  // Under the exclusion convention the model agrees as well.
  const auto ex = build_m_fin(3, 3, perm::TrivialConvention::kExclude);
  CHECK(check_translation(parse_group_formula("E x1 (x0*x1 = x1*x0 & x1 != x0)"), 1, *ex).pass());
}

TEST_CASE("sort checker") {
  const auto y = MTerm::var("y");
  CHECK_THROWS_AS(sort_check(MFormula::eq(y), {{"y", Sort::f(3)}}), Error);
  CHECK_THROWS_AS(sort_check(MFormula::prod(y), {{"y", Sort::f(2)}}), Error);
  CHECK_THROWS_AS(sort_check(MFormula::eq(y)), Error);
  CHECK_THROWS_AS(sort_check(MFormula::equal(y, MTerm::var("z")), {{"y", Sort::f(2)}, {"z", Sort::f(1)}}), Error);
  CHECK_THROWS_AS(sort_check(MFormula::equal(MTerm::app(y, MTerm::var("t")), MTerm::zero()),
                             {{"y", Sort::f(2)}, {"t", Sort::is(1)}}),
                  Error);
  CHECK_THROWS_AS(sort_check(MFormula::less(y, MTerm::zero()), {{"y", Sort::f(2)}}), Error);
  CHECK_THROWS_AS(sort_check(MFormula::eq(MTerm::reindex(y, {0, 3})), {{"y", Sort::f(3)}}), Error);
  CHECK(sort_check(MFormula::eq(MTerm::reindex(y, {0, 2})), {{"y", Sort::f(3)}}).size() == 1);

  for (const auto& name : mlib::names()) {
    CAPTURE(name);
    const auto e = mlib::build(name);
    CHECK_NOTHROW(sort_check(e.formula, e.free));
  }
  const auto az = mlib::almost_zero("k");
  CHECK(az.kind() == MFormula::Kind::kForall);
  CHECK(az.bound_sort() == Sort::is(2));
  CHECK(sort_check(mlib::cf_le_continuum()).empty());
}

TEST_CASE("census-language formulas in the finite model") {
  const auto model = build_m_fin(4, 4);
  auto type_of = [&](const PermTuple& t) {
    return model->type_id(perm::canonical_type(t, perm::orbits(t)[0]));
  };
  auto holds = [&](const MFormula& f, MAssignment a) { return eval_m(f, *model, a); };

  // commuting_type against direct evaluation on every IS2 type.
  const auto comm = mlib::commuting_type("t");
  for (std::uint32_t id = 0; id < model->types(2).size(); ++id) {
    const auto t = model->types(2)[id].to_tuple();
    CHECK(holds(comm, {{"t", {Sort::is(2), id}}}) == (t[0] * t[1] == t[1] * t[0]));
  }

  const auto swap = PermTuple(2, {Permutation::from_cycles(2, {{0, 1}})});
  const auto three = PermTuple(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  const auto klein = PermTuple(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  const auto s3 = PermTuple(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  const auto prod = mlib::is_product_type("t", "t1", "t2");
  auto check = [&](const PermTuple& t, const PermTuple& t1, const PermTuple& t2) {
    return holds(prod, {{"t", {Sort::is(2), type_of(t)}},
                        {"t1", {Sort::is(1), type_of(t1)}},
                        {"t2", {Sort::is(1), type_of(t2)}}});
  };
  CHECK(check(klein, swap, swap));
  CHECK_FALSE(check(s3, swap, three));
  CHECK_FALSE(check(klein, three, swap));

  // Membership and almost-zero on F2.
  const auto perms = sym(4);
  const auto id_census = model->census_id(perm::census(PermTuple::identity(4, 2)));
  CHECK(holds(mlib::almost_zero("k"), {{"k", {Sort::f(2), id_census}}}) == false);
  CHECK(holds(mlib::cf_le_continuum(), {}) == false);
}
