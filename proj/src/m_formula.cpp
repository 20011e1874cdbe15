#include "symq/m_formula.hpp"

#include <algorithm>
#include <optional>

namespace symq::logic {

using perm::CoordMap;
using perm::kIdentityCoord;

std::string Sort::to_string() const {
  switch (kind) {
    case Kind::kIS: return "IS" + std::to_string(arity);
    case Kind::kCard: return "Card";
    case Kind::kF: return "F" + std::to_string(arity);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Terms

struct MTerm::Node {
  Kind kind = Kind::kZero;
  std::string name;
  CoordMap map;
  std::vector<MTerm> args;
};

namespace {

template <class Node, class... A>
std::shared_ptr<const Node> node(A&&... a) {
  return std::make_shared<const Node>(Node{std::forward<A>(a)...});
}

}  // namespace

MTerm MTerm::var(std::string name) { return MTerm(node<Node>(Kind::kVar, std::move(name), CoordMap{}, std::vector<MTerm>{})); }
MTerm MTerm::zero() { return MTerm(node<Node>(Kind::kZero, std::string{}, CoordMap{}, std::vector<MTerm>{})); }
MTerm MTerm::reindex(MTerm h, CoordMap map) {
  return MTerm(node<Node>(Kind::kReindex, std::string{}, std::move(map), std::vector<MTerm>{std::move(h)}));
}
MTerm MTerm::proj(MTerm h) {
  return MTerm(node<Node>(Kind::kProj, std::string{}, CoordMap{}, std::vector<MTerm>{std::move(h)}));
}
MTerm MTerm::app(MTerm h, MTerm t) {
  return MTerm(node<Node>(Kind::kApp, std::string{}, CoordMap{}, std::vector<MTerm>{std::move(h), std::move(t)}));
}

MTerm::Kind MTerm::kind() const { return node_->kind; }
const std::string& MTerm::name() const { return node_->name; }
const CoordMap& MTerm::map() const { return node_->map; }
const std::vector<MTerm>& MTerm::args() const { return node_->args; }

bool operator==(const MTerm& a, const MTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.map() == b.map() && a.args() == b.args();
}

// ---------------------------------------------------------------------------
// Formulas

struct MFormula::Node {
  Kind kind = Kind::kTrue;
  std::vector<MTerm> terms;
  CoordMap map;
  bool weighted = false;
  std::string bound;
  Sort sort;
  std::vector<MFormula> kids;
};

namespace {

using FK = MFormula::Kind;

std::shared_ptr<const MFormula::Node> fnode(FK k, std::vector<MTerm> terms = {}, CoordMap map = {},
                                            bool weighted = false, std::vector<MFormula> kids = {},
                                            std::string bound = {}, Sort sort = {}) {
  return std::make_shared<const MFormula::Node>(
      MFormula::Node{k, std::move(terms), std::move(map), weighted, std::move(bound), sort, std::move(kids)});
}

}  // namespace

MFormula MFormula::truth(bool value) { return MFormula(fnode(value ? FK::kTrue : FK::kFalse)); }
MFormula MFormula::eq1(MTerm t, CoordMap map) { return MFormula(fnode(FK::kEq1, {std::move(t)}, std::move(map))); }
MFormula MFormula::prod1(MTerm t, CoordMap map) {
  return MFormula(fnode(FK::kProd1, {std::move(t)}, std::move(map)));
}
MFormula MFormula::proj1(MTerm t_prime, MTerm t, CoordMap map) {
  return MFormula(fnode(FK::kProj1, {std::move(t_prime), std::move(t)}, std::move(map)));
}
MFormula MFormula::eq(MTerm h, bool weighted) { return MFormula(fnode(FK::kEq, {std::move(h)}, {}, weighted)); }
MFormula MFormula::prod(MTerm h, bool weighted) { return MFormula(fnode(FK::kProd, {std::move(h)}, {}, weighted)); }
MFormula MFormula::less(MTerm c, MTerm d) { return MFormula(fnode(FK::kLess, {std::move(c), std::move(d)})); }
MFormula MFormula::equal(MTerm a, MTerm b) { return MFormula(fnode(FK::kEqual, {std::move(a), std::move(b)})); }
MFormula MFormula::negate(MFormula f) { return MFormula(fnode(FK::kNot, {}, {}, false, {std::move(f)})); }
MFormula MFormula::all(std::vector<MFormula> fs) {
  if (fs.empty()) return truth(true);
  if (fs.size() == 1) return fs.front();
  return MFormula(fnode(FK::kAnd, {}, {}, false, std::move(fs)));
}
MFormula MFormula::any(std::vector<MFormula> fs) {
  if (fs.empty()) return truth(false);
  if (fs.size() == 1) return fs.front();
  return MFormula(fnode(FK::kOr, {}, {}, false, std::move(fs)));
}
MFormula MFormula::implies(MFormula a, MFormula b) {
  return MFormula(fnode(FK::kImplies, {}, {}, false, {std::move(a), std::move(b)}));
}
MFormula MFormula::iff(MFormula a, MFormula b) {
  return MFormula(fnode(FK::kIff, {}, {}, false, {std::move(a), std::move(b)}));
}
MFormula MFormula::exists(std::string var, Sort sort, MFormula body) {
  return MFormula(fnode(FK::kExists, {}, {}, false, {std::move(body)}, std::move(var), sort));
}
MFormula MFormula::forall(std::string var, Sort sort, MFormula body) {
  return MFormula(fnode(FK::kForall, {}, {}, false, {std::move(body)}, std::move(var), sort));
}

MFormula::Kind MFormula::kind() const { return node_->kind; }
const std::vector<MTerm>& MFormula::terms() const { return node_->terms; }
const CoordMap& MFormula::map() const { return node_->map; }
bool MFormula::weighted() const { return node_->weighted; }
const std::string& MFormula::bound() const { return node_->bound; }
Sort MFormula::bound_sort() const { return node_->sort; }
const std::vector<MFormula>& MFormula::children() const { return node_->kids; }

bool operator==(const MFormula& a, const MFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto &x = *a.node_, &y = *b.node_;
  return x.kind == y.kind && x.terms == y.terms && x.map == y.map && x.weighted == y.weighted &&
         x.bound == y.bound && x.sort == y.sort && x.kids == y.kids;
}

// ---------------------------------------------------------------------------
// Sorts

namespace {

[[noreturn]] void sort_error(const std::string& what, const std::string& where) {
  throw Error("sort error: " + what + " in " + where);
}

void check_map(const CoordMap& map, std::uint32_t source_arity, const std::string& where) {
  for (auto c : map)
    if (c != kIdentityCoord && c >= source_arity)
      sort_error("coordinate " + std::to_string(c) + " out of range for arity " + std::to_string(source_arity),
                 where);
}

Sort expect_kind(const MTerm& t, const SortEnv& env, Sort::Kind k, const std::string& where) {
  const Sort s = sort_of(t, env);
  if (s.kind != k) {
    const char* want = k == Sort::Kind::kIS ? "a type" : k == Sort::Kind::kF ? "a census" : "a cardinal";
    sort_error(render(t) + " has sort " + s.to_string() + ", expected " + want, where);
  }
  return s;
}

// Arity of the action a type relation inspects, after its coordinate map.
void check_type_relation(const MFormula& f, const SortEnv& env, std::uint32_t want, const std::string& where) {
  const Sort s = expect_kind(f.terms()[0], env, Sort::Kind::kIS, where);
  if (f.map().empty()) {
    if (s.arity != want) sort_error("expected IS" + std::to_string(want) + ", got " + s.to_string(), where);
  } else {
    if (f.map().size() != want) sort_error("coordinate map must have " + std::to_string(want) + " entries", where);
    check_map(f.map(), s.arity, where);
  }
}

void check(const MFormula& f, SortEnv& env, SortEnv& used, const SortEnv& free) {
  const std::string where = f.is_quantifier()         ? "quantifier over " + f.bound()
                            : f.children().empty() ? render(f)
                                                   : std::string("connective");
  auto note_vars = [&](auto&& self, const MTerm& t) -> void {
    if (t.kind() == MTerm::Kind::kVar && free.count(t.name()) && env.at(t.name()) == free.at(t.name()))
      used.emplace(t.name(), free.at(t.name()));
    for (const auto& a : t.args()) self(self, a);
  };
  for (const auto& t : f.terms()) {
    sort_of(t, env);
    note_vars(note_vars, t);
  }
  switch (f.kind()) {
    case FK::kTrue:
    case FK::kFalse: return;
    case FK::kEq1: check_type_relation(f, env, 2, where); return;
    case FK::kProd1: check_type_relation(f, env, 3, where); return;
    case FK::kProj1: {
      const Sort a = expect_kind(f.terms()[0], env, Sort::Kind::kIS, where);
      const Sort b = expect_kind(f.terms()[1], env, Sort::Kind::kIS, where);
      if (f.map().empty()) {
        if (a.arity != b.arity + 1) sort_error("Proj1 relates IS(n+1) to IS(n)", where);
      } else {
        if (f.map().size() != b.arity) sort_error("coordinate map length differs from the target arity", where);
        check_map(f.map(), a.arity, where);
      }
      return;
    }
    case FK::kEq:
    case FK::kProd: {
      const Sort s = expect_kind(f.terms()[0], env, Sort::Kind::kF, where);
      const std::uint32_t want = f.kind() == FK::kEq ? 2 : 3;
      if (s.arity != want) sort_error("expected F" + std::to_string(want) + ", got " + s.to_string(), where);
      return;
    }
    case FK::kLess:
      expect_kind(f.terms()[0], env, Sort::Kind::kCard, where);
      expect_kind(f.terms()[1], env, Sort::Kind::kCard, where);
      return;
    case FK::kEqual: {
      const Sort a = sort_of(f.terms()[0], env), b = sort_of(f.terms()[1], env);
      if (a != b) sort_error("comparing " + a.to_string() + " with " + b.to_string(), where);
      return;
    }
    case FK::kNot:
    case FK::kAnd:
    case FK::kOr:
    case FK::kImplies:
    case FK::kIff:
      for (const auto& c : f.children()) check(c, env, used, free);
      return;
    case FK::kExists:
    case FK::kForall: {
      const Sort s = f.bound_sort();
      if (s.kind == Sort::Kind::kIS && s.arity == 0) sort_error("IS0 is empty", where);
      std::optional<Sort> saved;
      if (auto it = env.find(f.bound()); it != env.end()) saved = it->second;
      env[f.bound()] = s;
      check(f.children()[0], env, used, free);
      if (saved) env[f.bound()] = *saved;
      else env.erase(f.bound());
      return;
    }
  }
}

}  // namespace

Sort sort_of(const MTerm& t, const SortEnv& env) {
  switch (t.kind()) {
    case MTerm::Kind::kVar: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error("sort error: unbound variable " + t.name());
      return it->second;
    }
    case MTerm::Kind::kZero: return Sort::card();
    case MTerm::Kind::kReindex: {
      const Sort s = expect_kind(t.args()[0], env, Sort::Kind::kF, render(t));
      check_map(t.map(), s.arity, render(t));
      return Sort::f(static_cast<std::uint32_t>(t.map().size()));
    }
    case MTerm::Kind::kProj: {
      const Sort s = expect_kind(t.args()[0], env, Sort::Kind::kF, render(t));
      if (s.arity == 0) sort_error("cannot project F0", render(t));
      return Sort::f(s.arity - 1);
    }
    case MTerm::Kind::kApp: {
      const Sort h = expect_kind(t.args()[0], env, Sort::Kind::kF, render(t));
      const Sort ty = expect_kind(t.args()[1], env, Sort::Kind::kIS, render(t));
      if (h.arity != ty.arity) sort_error("applying " + h.to_string() + " to " + ty.to_string(), render(t));
      return Sort::card();
    }
  }
  return Sort::card();
}

SortEnv sort_check(const MFormula& f, const SortEnv& free) {
  SortEnv env = free, used;
  check(f, env, used, free);
  return used;
}

std::uint32_t max_arity(const MFormula& f, const SortEnv& free) {
  std::uint32_t m = 0;
  SortEnv env = free;
  auto term = [&](auto&& self, const MTerm& t) -> void {
    const Sort s = sort_of(t, env);
    m = std::max(m, s.arity);
    for (const auto& a : t.args()) self(self, a);
  };
  auto rec = [&](auto&& self, const MFormula& g) -> void {
    for (const auto& t : g.terms()) term(term, t);
    if (g.is_quantifier()) {
      m = std::max(m, g.bound_sort().arity);
      std::optional<Sort> saved;
      if (auto it = env.find(g.bound()); it != env.end()) saved = it->second;
      env[g.bound()] = g.bound_sort();
      self(self, g.children()[0]);
      if (saved) env[g.bound()] = *saved;
      else env.erase(g.bound());
      return;
    }
    if (g.kind() == FK::kProd || g.kind() == FK::kProd1) m = std::max<std::uint32_t>(m, 3);
    for (const auto& c : g.children()) self(self, c);
  };
  rec(rec, f);
  return m;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string coords(const CoordMap& map) {
  std::string out;
  for (auto c : map) out += c == kIdentityCoord ? " id" : " " + std::to_string(c);
  return out;
}

}  // namespace

std::string render(const MTerm& t) {
  switch (t.kind()) {
    case MTerm::Kind::kVar: return t.name();
    case MTerm::Kind::kZero: return "0";
    case MTerm::Kind::kReindex: return "(reindex " + render(t.args()[0]) + coords(t.map()) + ")";
    case MTerm::Kind::kProj: return "(proj " + render(t.args()[0]) + ")";
    case MTerm::Kind::kApp: return "(app " + render(t.args()[0]) + " " + render(t.args()[1]) + ")";
  }
  return "?";
}

std::string render(const MFormula& f) {
  auto terms = [&] {
    std::string out;
    for (const auto& t : f.terms()) out += " " + render(t);
    return out;
  };
  auto kids = [&] {
    std::string out;
    for (const auto& c : f.children()) out += " " + render(c);
    return out;
  };
  auto with_map = [&](const char* head) {
    std::string out = std::string("(") + head + terms();
    if (!f.map().empty()) out += " (map" + coords(f.map()) + ")";
    return out + ")";
  };
  switch (f.kind()) {
    case FK::kTrue: return "true";
    case FK::kFalse: return "false";
    case FK::kEq1: return with_map("Eq1");
    case FK::kProd1: return with_map("Prod1");
    case FK::kProj1: return with_map("Proj1");
    case FK::kEq: return std::string(f.weighted() ? "(EqW" : "(Eq") + terms() + ")";
    case FK::kProd: return std::string(f.weighted() ? "(ProdW" : "(Prod") + terms() + ")";
    case FK::kLess: return "(<" + terms() + ")";
    case FK::kEqual: return "(=" + terms() + ")";
    case FK::kNot: return "(not" + kids() + ")";
    case FK::kAnd: return "(and" + kids() + ")";
    case FK::kOr: return "(or" + kids() + ")";
    case FK::kImplies: return "(implies" + kids() + ")";
    case FK::kIff: return "(iff" + kids() + ")";
    case FK::kExists:
    case FK::kForall:
      return std::string(f.kind() == FK::kExists ? "(exists (" : "(forall (") + f.bound() + " " +
             f.bound_sort().to_string() + ")" + kids() + ")";
  }
  return "?";
}

}  // namespace symq::logic
