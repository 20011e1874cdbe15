#include "symq/translate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "symq/parallel.hpp"

namespace symq::logic {

using perm::CoordMap;
using Kind = GroupFormula::Kind;

std::string census_var(std::size_t depth) { return "y" + std::to_string(depth); }

namespace {

class Translator {
 public:
  explicit Translator(const TranslateOptions& options) : options_(options) {}

  // scope[i] is the group variable carried by coordinate i of census_var(depth).
  MFormula run(const GroupFormula& f, std::vector<Var>& scope) {
    const auto& v = f.vars();
    const auto& c = f.children();
    switch (f.kind()) {
      case Kind::kTrue: return MFormula::truth(true);
      case Kind::kFalse: return MFormula::truth(false);
      case Kind::kEq: return MFormula::eq(select(scope, {coord(scope, v[0]), coord(scope, v[1])}), options_.weighted);
      case Kind::kIsOne:
        return MFormula::eq(select(scope, {coord(scope, v[0]), perm::kIdentityCoord}), options_.weighted);
      case Kind::kMul:
        return MFormula::prod(select(scope, {coord(scope, v[0]), coord(scope, v[1]), coord(scope, v[2])}),
                              options_.weighted);
      case Kind::kNot: return MFormula::negate(run(c[0], scope));
      case Kind::kAnd:
      case Kind::kOr: {
        std::vector<MFormula> parts;
        for (const auto& g : c) parts.push_back(run(g, scope));
        return f.kind() == Kind::kAnd ? MFormula::all(std::move(parts)) : MFormula::any(std::move(parts));
      }
      case Kind::kImplies: return MFormula::implies(run(c[0], scope), run(c[1], scope));
      case Kind::kIff: return MFormula::iff(run(c[0], scope), run(c[1], scope));
      case Kind::kExists: return exists(f.bound(), c[0], scope);
      case Kind::kForall:
        return MFormula::negate(exists(f.bound(), GroupFormula::negate(c[0]), scope));
    }
    return MFormula::truth(false);
  }

 private:
  static std::size_t coord(const std::vector<Var>& scope, Var v) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == v) return i;
    throw Error("unbound variable x" + std::to_string(v));
  }

  MTerm current() const { return MTerm::var(census_var(depth_)); }

  MTerm select(const std::vector<Var>& scope, CoordMap map) const {
    CoordMap id(scope.size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    if (map == id) return current();
    return MTerm::reindex(current(), std::move(map));
  }

  MFormula exists(Var x, const GroupFormula& body, std::vector<Var>& scope) {
    const MTerm outer = current();
    scope.push_back(x);
    ++depth_;
    const std::string inner = census_var(depth_);
    MFormula psi = run(body, scope);
    --depth_;
    scope.pop_back();
    const auto sort = Sort::f(static_cast<std::uint32_t>(scope.size() + 1));
    return MFormula::exists(inner, sort, MFormula::all({psi, MFormula::equal(MTerm::proj(MTerm::var(inner)), outer)}));
  }

  TranslateOptions options_;
  std::size_t depth_ = 0;
};

std::vector<perm::Permutation> permutations_of(std::size_t omega) {
  std::vector<perm::Point> p(omega);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<perm::Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

MFormula translate(const GroupFormula& phi, std::size_t arity, const TranslateOptions& options) {
  for (Var v : free_vars(phi))
    if (v >= arity)
      throw Error("unbound variable x" + std::to_string(v) + " for arity " + std::to_string(arity));
  std::vector<Var> scope(arity);
  std::iota(scope.begin(), scope.end(), Var{0});
  return Translator(options).run(phi, scope);
}

std::size_t translation_arity(const GroupFormula& phi, std::size_t arity) {
  const auto psi = translate(phi, arity);
  return std::max<std::size_t>(arity, max_arity(psi, {{census_var(0), Sort::f(static_cast<std::uint32_t>(arity))}}));
}

Report check_translation(const GroupFormula& phi, std::size_t arity, const MFinModel& model,
                         const TranslateOptions& options) {
  Report r;
  r.name = "check-translation";
  const std::size_t omega = model.omega();
  const MFormula psi = translate(phi, arity, options);
  const auto perms = permutations_of(omega);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= perms.size();

  struct Outcome {
    bool group = false, census = false;
  };
  const auto sort = Sort::f(static_cast<std::uint32_t>(arity));
  auto tuple_at = [&](std::uint64_t idx) {
    std::vector<perm::Permutation> entries(arity);
    for (std::size_t i = 0; i < arity; ++i) {
      entries[i] = perms[idx % perms.size()];
      idx /= perms.size();
    }
    return perm::PermTuple(omega, std::move(entries));
  };
  const auto outcomes = parallel_map<Outcome>(static_cast<std::size_t>(total), [&](std::size_t idx) {
    const auto t = tuple_at(idx);
    Outcome o;
    o.group = eval_group(phi, omega, t);
    const auto id = model.census_id(perm::census(t, model.convention()));
    o.census = eval_m(psi, model, {{census_var(0), MValue{sort, id}}});
    return o;
  });

  std::size_t agree = 0, holds = 0;
  for (std::size_t idx = 0; idx < outcomes.size(); ++idx) {
    const auto& o = outcomes[idx];
    holds += o.group;
    if (o.group == o.census) {
      ++agree;
    } else if (r.violations.size() < 20) {
      r.violations.push_back("assignment [" + tuple_at(idx).to_string() + "]: group " +
                             (o.group ? "true" : "false") + ", census model " + (o.census ? "true" : "false"));
    }
  }
  r.fact("formula", render(phi));
  r.fact("omega", std::to_string(omega));
  r.fact("arity", std::to_string(arity));
  r.fact("assignments", std::to_string(outcomes.size()));
  r.fact("agree", std::to_string(agree));
  r.fact("true_in_group", std::to_string(holds));
  if (agree != outcomes.size()) r.fact("disagree", std::to_string(outcomes.size() - agree));
  return r;
}

Report check_translation(const GroupFormula& phi, std::size_t arity, std::size_t omega,
                         const TranslateOptions& options) {
  const auto model = build_m_fin(omega, translation_arity(phi, arity));
  return check_translation(phi, arity, *model, options);
}

}  // namespace symq::logic
