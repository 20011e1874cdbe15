#include "symq/m_model.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "symq/parallel.hpp"

namespace symq::logic {

using perm::Census;
using perm::CoordMap;
using perm::OrbitType;
using perm::Permutation;
using perm::PermTuple;
using perm::TrivialConvention;

namespace {

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<perm::Point> p(d);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t checked_pow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / std::max<std::uint64_t>(b, 1)) return cap + 1;
    r *= b;
  }
  return r;
}

// Canonical types of all transitive n-tuples on exactly d points.
std::set<OrbitType> transitive_types(std::size_t n, std::size_t d) {
  const auto perms = all_permutations(d);
  const std::uint64_t base = perms.size();
  const std::uint64_t total = checked_pow(base, n, ~0ull >> 1);
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 1024));
  std::vector<std::set<OrbitType>> found(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t from = total * c / chunks, to = total * (c + 1) / chunks;
    std::vector<Permutation> entries(n);
    for (std::uint64_t idx = from; idx < to; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < n; ++i) {
        entries[i] = perms[r % base];
        r /= base;
      }
      PermTuple t(d, entries);
      auto orbs = perm::orbits(t);
      if (orbs.size() == 1) found[c].insert(perm::canonical_type(t, orbs[0]));
    }
  });
  std::set<OrbitType> out;
  for (auto& s : found) out.merge(s);
  return out;
}

}  // namespace

MFinModel::MFinModel(std::size_t omega, std::size_t max_arity, TrivialConvention convention,
                     const MFinLimits& limits)
    : omega_(omega), convention_(convention) {
  if (omega == 0) throw Error("the model needs at least one point");
  if (omega > limits.max_omega)
    throw Error("bound exceeded: omega = " + std::to_string(omega) + " is above the limit " +
                std::to_string(limits.max_omega));
  if (max_arity > limits.max_arity)
    throw Error("bound exceeded: arity " + std::to_string(max_arity) + " is above the limit " +
                std::to_string(limits.max_arity));
  std::uint64_t work = 0;
  for (std::size_t n = 0; n <= max_arity; ++n)
    for (std::size_t d = 1; d <= omega; ++d) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= d; ++i) f *= i;
      work += checked_pow(f, n, limits.tuple_budget);
    }
  if (work > limits.tuple_budget)
    throw Error("bound exceeded: listing the orbit types needs more than " + std::to_string(limits.tuple_budget) +
                " tuples");

  const bool include = convention == TrivialConvention::kInclude;
  types_.resize(max_arity + 1);
  type_index_.resize(max_arity + 1);
  censuses_.resize(max_arity + 1);
  census_index_.resize(max_arity + 1);
  for (std::size_t n = 0; n <= max_arity; ++n) {
    std::set<OrbitType> all;
    for (std::size_t d = 1; d <= omega; ++d) all.merge(transitive_types(n, d));
    types_[n].assign(all.begin(), all.end());
    for (std::uint32_t i = 0; i < types_[n].size(); ++i) type_index_[n].emplace(types_[n][i], i);

    // Multisets of types with the weight the convention asks for.
    std::vector<const OrbitType*> usable;
    for (const auto& t : types_[n])
      if (include || !t.is_trivial()) usable.push_back(&t);
    std::vector<std::size_t> counts(usable.size());
    auto emit = [&] {
      Census c(n, convention);
      for (std::size_t i = 0; i < usable.size(); ++i) c.add(*usable[i], counts[i]);
      census_index_[n].emplace(c, static_cast<std::uint32_t>(censuses_[n].size()));
      censuses_[n].push_back(std::move(c));
    };
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i == usable.size()) {
        if (!include || left == 0) emit();
        return;
      }
      const std::size_t deg = usable[i]->degree;
      for (std::size_t k = 0; k * deg <= left; ++k) {
        counts[i] = k;
        self(self, i + 1, left - k * deg);
      }
      counts[i] = 0;
    };
    rec(rec, 0, omega);
  }

  fibers_.resize(max_arity);
  for (std::size_t n = 0; n < max_arity; ++n) {
    fibers_[n].resize(censuses_[n].size());
    const auto below = parallel_map<std::uint32_t>(
        censuses_[n + 1].size(), [&](std::size_t id) { return proj(n + 1, static_cast<std::uint32_t>(id)); });
    for (std::uint32_t id = 0; id < below.size(); ++id) fibers_[n][below[id]].push_back(id);
  }
}

std::shared_ptr<const MFinModel> build_m_fin(std::size_t omega, std::size_t max_arity, TrivialConvention convention,
                                             const MFinLimits& limits) {
  return std::make_shared<const MFinModel>(omega, max_arity, convention, limits);
}

std::uint32_t MFinModel::type_id(const OrbitType& t) const {
  if (t.arity < type_index_.size())
    if (auto it = type_index_[t.arity].find(t); it != type_index_[t.arity].end()) return it->second;
  throw Error("orbit type of arity " + std::to_string(t.arity) + " and degree " + std::to_string(t.degree) +
              " is not in the model");
}

std::uint32_t MFinModel::census_id(const Census& c) const {
  if (c.arity() < census_index_.size() && c.convention() == convention_)
    if (auto it = census_index_[c.arity()].find(c); it != census_index_[c.arity()].end()) return it->second;
  throw Error("census " + c.to_string() + " is not in the model");
}

std::size_t MFinModel::KeyHash::operator()(const std::vector<std::uint64_t>& k) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : k) h = (h ^ std::hash<std::uint64_t>{}(x)) * 0x100000001b3ull;
  return h;
}

std::uint32_t MFinModel::reindex(std::size_t n, std::uint32_t id, const CoordMap& map) const {
  if (map.size() > max_arity())
    throw Error("bound exceeded: reindexing to arity " + std::to_string(map.size()) + " in a model of arity " +
                std::to_string(max_arity()));
  std::vector<std::uint64_t> key{n, id};
  key.insert(key.end(), map.begin(), map.end());
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = reindex_memo_.find(key); it != reindex_memo_.end()) return it->second;
  }
  const std::uint32_t out = census_id(perm::census_reindex(censuses_.at(n).at(id), map));
  std::unique_lock lock(memo_mutex_);
  reindex_memo_.emplace(std::move(key), out);
  return out;
}

std::uint32_t MFinModel::proj(std::size_t n, std::uint32_t id) const {
  if (n == 0) throw Error("cannot project a census of arity 0");
  CoordMap drop(n - 1);
  std::iota(drop.begin(), drop.end(), std::size_t{0});
  return reindex(n, id, drop);
}

const std::vector<std::uint32_t>& MFinModel::fiber(std::size_t n, std::uint32_t id) const {
  if (n >= fibers_.size())
    throw Error("bound exceeded: extending arity " + std::to_string(n) + " in a model of arity " +
                std::to_string(max_arity()));
  return fibers_[n].at(id);
}

namespace {

// Generator i of a canonical certificate, as an image vector.
std::span<const std::uint16_t> generator(const OrbitType& t, std::size_t i) {
  return std::span<const std::uint16_t>(t.certificate).subspan(i * t.degree, t.degree);
}

bool type_eq(const OrbitType& t) {
  const auto a = generator(t, 0), b = generator(t, 1);
  return std::equal(a.begin(), a.end(), b.begin());
}

bool type_prod(const OrbitType& t) {
  const auto a = generator(t, 0), b = generator(t, 1), c = generator(t, 2);
  for (std::size_t x = 0; x < t.degree; ++x)
    if (c[x] != b[a[x]]) return false;
  return true;
}

// Sum of count (or degree times count) over types failing the test.
bool census_holds(const Census& c, bool weighted, bool (*test)(const OrbitType&)) {
  std::size_t bad = 0;
  for (const auto& [t, k] : c.counts())
    if (!test(t)) bad += weighted ? t.degree * k : k;
  return bad == 0;
}

PermTuple reindexed_action(const OrbitType& t, const CoordMap& map, std::size_t want) {
  if (map.empty()) {
    if (t.arity != want) throw Error("type relation applied to the wrong arity");
    return t.to_tuple();
  }
  return perm::reindex(t.to_tuple(), map);
}

}  // namespace

bool MFinModel::eq(std::uint32_t h, bool weighted) const { return census_holds(censuses_.at(2).at(h), weighted, type_eq); }

bool MFinModel::prod(std::uint32_t h, bool weighted) const {
  return census_holds(censuses_.at(3).at(h), weighted, type_prod);
}

bool MFinModel::eq1(std::size_t n, std::uint32_t t, const CoordMap& map) const {
  const auto a = reindexed_action(types_.at(n).at(t), map, 2);
  return a[0] == a[1];
}

bool MFinModel::prod1(std::size_t n, std::uint32_t t, const CoordMap& map) const {
  const auto a = reindexed_action(types_.at(n).at(t), map, 3);
  return a[0] * a[1] == a[2];
}

bool MFinModel::proj1(std::size_t n, std::uint32_t t_prime, std::size_t m, std::uint32_t t,
                      const CoordMap& map) const {
  CoordMap cm = map;
  if (cm.empty()) {
    if (n == 0 || m + 1 != n) throw Error("Proj1 relates IS(n+1) to IS(n)");
    cm.resize(m);
    std::iota(cm.begin(), cm.end(), std::size_t{0});
  }
  const PermTuple restricted = perm::reindex(types_.at(n).at(t_prime).to_tuple(), cm);
  const auto& target = types_.at(m).at(t);
  for (const auto& orbit : perm::orbits(restricted))
    if (perm::canonical_type(restricted, orbit) == target) return true;
  return false;
}

std::uint32_t MFinModel::app(std::size_t n, std::uint32_t h, std::uint32_t t) const {
  return static_cast<std::uint32_t>(censuses_.at(n).at(h).count(types_.at(n).at(t)));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using FK = MFormula::Kind;
using TK = MTerm::Kind;

bool mentions(const MTerm& t, const std::string& name) {
  if (t.kind() == TK::kVar) return t.name() == name;
  for (const auto& a : t.args())
    if (mentions(a, name)) return true;
  return false;
}

class MEvaluator {
 public:
  MEvaluator(const MFinModel& model, MAssignment env) : model_(model), env_(std::move(env)) {}

  bool eval(const MFormula& f) {
    const auto& ts = f.terms();
    const auto& c = f.children();
    switch (f.kind()) {
      case FK::kTrue: return true;
      case FK::kFalse: return false;
      case FK::kEq1: {
        const auto t = term(ts[0]);
        return model_.eq1(t.sort.arity, t.value, f.map());
      }
      case FK::kProd1: {
        const auto t = term(ts[0]);
        return model_.prod1(t.sort.arity, t.value, f.map());
      }
      case FK::kProj1: {
        const auto a = term(ts[0]), b = term(ts[1]);
        return model_.proj1(a.sort.arity, a.value, b.sort.arity, b.value, f.map());
      }
      case FK::kEq: return model_.eq(term(ts[0]).value, f.weighted());
      case FK::kProd: return model_.prod(term(ts[0]).value, f.weighted());
      case FK::kLess: return term(ts[0]).value < term(ts[1]).value;
      case FK::kEqual: return term(ts[0]).value == term(ts[1]).value;
      case FK::kNot: return !eval(c[0]);
      case FK::kAnd:
        for (const auto& g : c)
          if (!eval(g)) return false;
        return true;
      case FK::kOr:
        for (const auto& g : c)
          if (eval(g)) return true;
        return false;
      case FK::kImplies: return !eval(c[0]) || eval(c[1]);
      case FK::kIff: return eval(c[0]) == eval(c[1]);
      case FK::kExists:
      case FK::kForall: return quantifier(f);
    }
    return false;
  }

 private:
  MValue lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == name) return it->second;
    throw Error("unassigned variable " + name);
  }

  MValue term(const MTerm& t) {
    switch (t.kind()) {
      case TK::kVar: return lookup(t.name());
      case TK::kZero: return {Sort::card(), 0};
      case TK::kReindex: {
        const auto h = term(t.args()[0]);
        return {Sort::f(static_cast<std::uint32_t>(t.map().size())), model_.reindex(h.sort.arity, h.value, t.map())};
      }
      case TK::kProj: {
        const auto h = term(t.args()[0]);
        return {Sort::f(h.sort.arity - 1), model_.proj(h.sort.arity, h.value)};
      }
      case TK::kApp: {
        const auto h = term(t.args()[0]), ty = term(t.args()[1]);
        return {Sort::card(), model_.app(h.sort.arity, h.value, ty.value)};
      }
    }
    return {};
  }

  std::size_t domain_size(Sort s) const {
    switch (s.kind) {
      case Sort::Kind::kIS: return model_.types(s.arity).size();
      case Sort::Kind::kCard: return model_.omega() + 1;
      case Sort::Kind::kF: return model_.censuses(s.arity).size();
    }
    return 0;
  }

  // Values of `name` that an equality conjunct allows, if it restricts them.
  std::optional<std::vector<std::uint32_t>> candidates(const MFormula& g, const std::string& name, Sort s) {
    if (g.kind() == FK::kAnd) {
      for (const auto& c : g.children())
        if (auto r = candidates(c, name, s)) return r;
      return std::nullopt;
    }
    if (g.kind() != FK::kEqual) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
      const auto& a = g.terms()[side];
      const auto& b = g.terms()[1 - side];
      if (mentions(b, name)) continue;
      if (a.kind() == TK::kVar && a.name() == name) return std::vector<std::uint32_t>{term(b).value};
      if (a.kind() == TK::kProj && a.args()[0].kind() == TK::kVar && a.args()[0].name() == name &&
          s.kind == Sort::Kind::kF)
        return model_.fiber(s.arity - 1, term(b).value);
    }
    return std::nullopt;
  }

  bool quantifier(const MFormula& f) {
    const bool existential = f.kind() == FK::kExists;
    const Sort s = f.bound_sort();
    const auto& body = f.children()[0];
    std::optional<std::vector<std::uint32_t>> only;
    if (existential) only = candidates(body, f.bound(), s);
    else if (body.kind() == FK::kImplies) only = candidates(body.children()[0], f.bound(), s);

    env_.emplace_back(f.bound(), MValue{s, 0});
    bool result = !existential;
    auto try_value = [&](std::uint32_t v) {
      env_.back().second.value = v;
      return eval(body) == existential;
    };
    if (only) {
      for (auto v : *only)
        if (try_value(v)) {
          result = existential;
          break;
        }
    } else {
      const std::size_t n = domain_size(s);
      for (std::uint32_t v = 0; v < n; ++v)
        if (try_value(v)) {
          result = existential;
          break;
        }
    }
    env_.pop_back();
    return result;
  }

  const MFinModel& model_;
  MAssignment env_;
};

}  // namespace

bool eval_m(const MFormula& f, const MFinModel& model, const MAssignment& assignment) {
  SortEnv free;
  for (const auto& [name, v] : assignment) {
    free[name] = v.sort;
    const bool in_range = v.sort.kind == Sort::Kind::kCard ? v.value <= model.omega()
                          : v.sort.arity > model.max_arity()
                              ? false
                              : v.value < (v.sort.kind == Sort::Kind::kIS ? model.types(v.sort.arity).size()
                                                                          : model.censuses(v.sort.arity).size());
    if (!in_range) throw Error("value of " + name + " is outside the model");
  }
  sort_check(f, free);
  const auto need = max_arity(f, free);
  if (need > model.max_arity())
    throw Error("bound exceeded: formula needs arity " + std::to_string(need) + ", model has " +
                std::to_string(model.max_arity()));
  return MEvaluator(model, assignment).eval(f);
}

}  // namespace symq::logic
