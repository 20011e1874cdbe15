#include "symq/group_formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace symq::logic {

using Kind = GroupFormula::Kind;

struct GroupFormula::Node {
  Kind kind = Kind::kTrue;
  std::vector<Var> vars;
  std::vector<GroupFormula> kids;
};

namespace {

std::shared_ptr<const GroupFormula::Node> make(Kind k, std::vector<Var> vars, std::vector<GroupFormula> kids) {
  auto n = std::make_shared<GroupFormula::Node>();
  n->kind = k;
  n->vars = std::move(vars);
  n->kids = std::move(kids);
  return n;
}

}  // namespace

GroupFormula::GroupFormula() : node_(make(Kind::kTrue, {}, {})) {}

GroupFormula GroupFormula::truth(bool value) {
  static const GroupFormula t(make(Kind::kTrue, {}, {}));
  static const GroupFormula f(make(Kind::kFalse, {}, {}));
  return value ? t : f;
}
GroupFormula GroupFormula::eq(Var a, Var b) { return GroupFormula(make(Kind::kEq, {a, b}, {})); }
GroupFormula GroupFormula::mul(Var a, Var b, Var c) { return GroupFormula(make(Kind::kMul, {a, b, c}, {})); }
GroupFormula GroupFormula::is_one(Var a) { return GroupFormula(make(Kind::kIsOne, {a}, {})); }
GroupFormula GroupFormula::negate(GroupFormula f) { return GroupFormula(make(Kind::kNot, {}, {std::move(f)})); }

GroupFormula GroupFormula::all(std::vector<GroupFormula> fs) {
  if (fs.empty()) return truth(true);
  if (fs.size() == 1) return fs.front();
  return GroupFormula(make(Kind::kAnd, {}, std::move(fs)));
}
GroupFormula GroupFormula::any(std::vector<GroupFormula> fs) {
  if (fs.empty()) return truth(false);
  if (fs.size() == 1) return fs.front();
  return GroupFormula(make(Kind::kOr, {}, std::move(fs)));
}
GroupFormula GroupFormula::implies(GroupFormula a, GroupFormula b) {
  return GroupFormula(make(Kind::kImplies, {}, {std::move(a), std::move(b)}));
}
GroupFormula GroupFormula::iff(GroupFormula a, GroupFormula b) {
  return GroupFormula(make(Kind::kIff, {}, {std::move(a), std::move(b)}));
}
GroupFormula GroupFormula::exists(Var v, GroupFormula body) {
  return GroupFormula(make(Kind::kExists, {v}, {std::move(body)}));
}
GroupFormula GroupFormula::forall(Var v, GroupFormula body) {
  return GroupFormula(make(Kind::kForall, {v}, {std::move(body)}));
}
GroupFormula GroupFormula::exists(const std::vector<Var>& vs, GroupFormula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}
GroupFormula GroupFormula::forall(const std::vector<Var>& vs, GroupFormula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

GroupFormula::Kind GroupFormula::kind() const { return node_->kind; }
const std::vector<Var>& GroupFormula::vars() const { return node_->vars; }
const std::vector<GroupFormula>& GroupFormula::children() const { return node_->kids; }

bool GroupFormula::is_atom() const {
  switch (kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
    case Kind::kEq:
    case Kind::kMul:
    case Kind::kIsOne: return true;
    default: return false;
  }
}

bool operator==(const GroupFormula& a, const GroupFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.vars() != b.vars() || a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!(a.children()[i] == b.children()[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Structural queries. All of them memoize on shared nodes.

namespace {

void collect_free(const GroupFormula& f, std::unordered_map<const void*, std::set<Var>>& memo,
                  std::set<Var>& out) {
  auto it = memo.find(f.id());
  if (it == memo.end()) {
    std::set<Var> s;
    if (f.is_atom()) {
      s.insert(f.vars().begin(), f.vars().end());
    } else {
      for (const auto& c : f.children()) collect_free(c, memo, s);
      if (f.is_quantifier()) s.erase(f.bound());
    }
    it = memo.emplace(f.id(), std::move(s)).first;
  }
  out.insert(it->second.begin(), it->second.end());
}

}  // namespace

std::set<Var> free_vars(const GroupFormula& f) {
  std::unordered_map<const void*, std::set<Var>> memo;
  std::set<Var> out;
  collect_free(f, memo, out);
  return out;
}

long max_var(const GroupFormula& f) {
  std::unordered_map<const void*, long> memo;
  auto rec = [&](auto&& self, const GroupFormula& g) -> long {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    long m = -1;
    for (Var v : g.vars()) m = std::max(m, static_cast<long>(v));
    for (const auto& c : g.children()) m = std::max(m, self(self, c));
    memo.emplace(g.id(), m);
    return m;
  };
  return rec(rec, f);
}

std::size_t quantifier_depth(const GroupFormula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  auto rec = [&](auto&& self, const GroupFormula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t d = 0;
    for (const auto& c : g.children()) d = std::max(d, self(self, c));
    if (g.is_quantifier()) ++d;
    memo.emplace(g.id(), d);
    return d;
  };
  return rec(rec, f);
}

std::size_t dag_size(const GroupFormula& f) {
  std::set<const void*> seen;
  std::vector<GroupFormula> stack{f};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    if (!seen.insert(g.id()).second) continue;
    for (const auto& c : g.children()) stack.push_back(c);
  }
  return seen.size();
}

std::uint64_t tree_size(const GroupFormula& f) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<const void*, std::uint64_t> memo;
  auto rec = [&](auto&& self, const GroupFormula& g) -> std::uint64_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::uint64_t n = 1;
    for (const auto& c : g.children()) {
      const auto s = self(self, c);
      n = s > kMax - n ? kMax : n + s;
    }
    memo.emplace(g.id(), n);
    return n;
  };
  return rec(rec, f);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kVar, kOne, kStar, kEq, kNe, kAnd, kOr, kNot, kImp, kIff, kExists, kForall, kLParen, kRParen,
                 kTrue, kFalse, kEnd };

struct Token {
  Tok tok;
  std::size_t column;  // 1-based
  Var var = 0;
};

[[noreturn]] void syntax_error(std::size_t column, const std::string& what) {
  throw Error("formula syntax error at column " + std::to_string(column) + ": " + what);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto word_end = [&](std::size_t j) {
    while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t j = i + 1;
      std::uint64_t v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
        if (v > 1'000'000) syntax_error(col, "variable index too large");
        ++j;
      }
      if (word_end(j) != j) syntax_error(col, "unexpected characters after variable");
      out.push_back({Tok::kVar, col, static_cast<Var>(v)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t j = word_end(i);
      const auto w = s.substr(i, j - i);
      if (w == "E") out.push_back({Tok::kExists, col});
      else if (w == "A") out.push_back({Tok::kForall, col});
      else if (w == "true") out.push_back({Tok::kTrue, col});
      else if (w == "false") out.push_back({Tok::kFalse, col});
      else syntax_error(col, "unknown word '" + std::string(w) + "'");
      i = j;
    } else if (c == '1') {
      if (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
        syntax_error(col, "only the constant 1 is allowed");
      out.push_back({Tok::kOne, col});
      ++i;
    } else if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::kIff, col});
      i += 3;
    } else if (s.substr(i, 2) == "->") {
      out.push_back({Tok::kImp, col});
      i += 2;
    } else if (s.substr(i, 2) == "!=") {
      out.push_back({Tok::kNe, col});
      i += 2;
    } else {
      Tok t;
      switch (c) {
        case '*': t = Tok::kStar; break;
        case '=': t = Tok::kEq; break;
        case '&': t = Tok::kAnd; break;
        case '|': t = Tok::kOr; break;
        case '!': t = Tok::kNot; break;
        case '(': t = Tok::kLParen; break;
        case ')': t = Tok::kRParen; break;
        default: syntax_error(col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({t, col});
      ++i;
    }
  }
  out.push_back({Tok::kEnd, s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {
    for (const auto& t : toks_)
      if (t.tok == Tok::kVar) fresh_ = std::max<Var>(fresh_, t.var + 1);
  }

  GroupFormula run() {
    auto f = formula();
    if (peek().tok != Tok::kEnd) syntax_error(peek().column, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().tok != t) return false;
    ++pos_;
    return true;
  }
  void expect(Tok t, const char* what) {
    if (!accept(t)) syntax_error(peek().column, std::string("expected ") + what);
  }

  GroupFormula formula() {
    auto f = implication();
    while (accept(Tok::kIff)) f = GroupFormula::iff(f, implication());
    return f;
  }
  GroupFormula implication() {
    auto f = disjunction();
    if (accept(Tok::kImp)) return GroupFormula::implies(f, implication());
    return f;
  }
  GroupFormula disjunction() {
    std::vector<GroupFormula> fs{conjunction()};
    while (accept(Tok::kOr)) fs.push_back(conjunction());
    return GroupFormula::any(std::move(fs));
  }
  GroupFormula conjunction() {
    std::vector<GroupFormula> fs{unary()};
    while (accept(Tok::kAnd)) fs.push_back(unary());
    return GroupFormula::all(std::move(fs));
  }
  GroupFormula unary() {
    const auto& t = peek();
    switch (t.tok) {
      case Tok::kNot: next(); return GroupFormula::negate(unary());
      case Tok::kExists:
      case Tok::kForall: {
        next();
        if (peek().tok != Tok::kVar) syntax_error(peek().column, "expected a variable after the quantifier");
        const Var v = next().var;
        expect(Tok::kLParen, "'(' around the quantifier body");
        auto body = formula();
        expect(Tok::kRParen, "')'");
        return t.tok == Tok::kExists ? GroupFormula::exists(v, body) : GroupFormula::forall(v, body);
      }
      case Tok::kLParen: {
        next();
        auto f = formula();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kTrue: next(); return GroupFormula::truth(true);
      case Tok::kFalse: next(); return GroupFormula::truth(false);
      case Tok::kVar:
      case Tok::kOne: return atom();
      default: syntax_error(t.column, "expected a formula");
    }
  }

  // Factors of a product with the 1s dropped.
  std::vector<Var> term() {
    std::vector<Var> out;
    do {
      const auto& t = next();
      if (t.tok == Tok::kVar) out.push_back(t.var);
      else if (t.tok != Tok::kOne) syntax_error(t.column, "expected a variable or 1");
    } while (accept(Tok::kStar));
    return out;
  }

  GroupFormula atom() {
    auto lhs = term();
    bool negated = false;
    if (accept(Tok::kNe)) negated = true;
    else expect(Tok::kEq, "'=' or '!='");
    auto rhs = term();
    auto f = equation(std::move(lhs), std::move(rhs));
    return negated ? GroupFormula::negate(f) : f;
  }

  GroupFormula equation(std::vector<Var> lhs, std::vector<Var> rhs) {
    return product_equation(std::move(lhs), std::move(rhs), fresh_);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Var fresh_ = 0;
};

// Precedence levels for rendering: larger binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::kIff: return 0;
    case Kind::kImplies: return 1;
    case Kind::kOr: return 2;
    case Kind::kAnd: return 3;
    default: return 4;
  }
}

void render_into(const GroupFormula& f, std::string& out);

void render_child(const GroupFormula& c, int min_prec, std::string& out) {
  if (precedence(c.kind()) < min_prec) {
    out += '(';
    render_into(c, out);
    out += ')';
  } else {
    render_into(c, out);
  }
}

std::string var_name(Var v) { return "x" + std::to_string(v); }

void render_into(const GroupFormula& f, std::string& out) {
  const auto& v = f.vars();
  const auto& c = f.children();
  switch (f.kind()) {
    case Kind::kTrue: out += "true"; return;
    case Kind::kFalse: out += "false"; return;
    case Kind::kEq: out += var_name(v[0]) + " = " + var_name(v[1]); return;
    case Kind::kMul: out += var_name(v[0]) + "*" + var_name(v[1]) + " = " + var_name(v[2]); return;
    case Kind::kIsOne: out += var_name(v[0]) + " = 1"; return;
    case Kind::kNot:
      out += '!';
      // An atom after '!' is parenthesized for readability.
      if (c[0].kind() == Kind::kNot || c[0].is_quantifier() || c[0].kind() == Kind::kTrue ||
          c[0].kind() == Kind::kFalse)
        render_into(c[0], out);
      else {
        out += '(';
        render_into(c[0], out);
        out += ')';
      }
      return;
    case Kind::kAnd:
    case Kind::kOr: {
      const char* sep = f.kind() == Kind::kAnd ? " & " : " | ";
      const int p = precedence(f.kind());
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += sep;
        // Nested same-kind chains keep their grouping.
        render_child(c[i], p + 1, out);
      }
      return;
    }
    case Kind::kImplies:
      render_child(c[0], 2, out);
      out += " -> ";
      render_child(c[1], 1, out);
      return;
    case Kind::kIff:
      render_child(c[0], 0, out);
      out += " <-> ";
      render_child(c[1], 1, out);
      return;
    case Kind::kExists:
    case Kind::kForall:
      out += f.kind() == Kind::kExists ? "E " : "A ";
      out += var_name(v[0]) + " (";
      render_into(c[0], out);
      out += ')';
      return;
  }
}

}  // namespace

GroupFormula parse_group_formula(std::string_view text) { return Parser(text).run(); }

namespace {

// Reduces a product to at most two factors, introducing z = a * b.
void shorten(std::vector<Var>& side, Var& fresh, std::vector<Var>& bound, std::vector<GroupFormula>& defs) {
  while (side.size() > 2) {
    const Var z = fresh++;
    bound.push_back(z);
    defs.push_back(GroupFormula::mul(side[0], side[1], z));
    side.erase(side.begin(), side.begin() + 2);
    side.insert(side.begin(), z);
  }
}

}  // namespace

GroupFormula product_equation(std::vector<Var> lhs, std::vector<Var> rhs, Var& fresh) {
  std::vector<Var> bound;
  std::vector<GroupFormula> defs;
  shorten(lhs, fresh, bound, defs);
  shorten(rhs, fresh, bound, defs);
  if (lhs.size() < rhs.size()) std::swap(lhs, rhs);
  if (lhs.size() == 2) {
    if (rhs.size() == 2) {
      const Var z = fresh++;
      bound.push_back(z);
      defs.push_back(GroupFormula::mul(lhs[0], lhs[1], z));
      defs.push_back(GroupFormula::mul(rhs[0], rhs[1], z));
    } else if (rhs.size() == 1) {
      defs.push_back(GroupFormula::mul(lhs[0], lhs[1], rhs[0]));
    } else {
      const Var z = fresh++;
      bound.push_back(z);
      defs.push_back(GroupFormula::mul(lhs[0], lhs[1], z));
      defs.push_back(GroupFormula::is_one(z));
    }
  } else if (lhs.size() == 1) {
    defs.push_back(rhs.empty() ? GroupFormula::is_one(lhs[0]) : GroupFormula::eq(lhs[0], rhs[0]));
  } else {
    defs.push_back(GroupFormula::truth(true));
  }
  return GroupFormula::exists(bound, GroupFormula::all(std::move(defs)));
}

std::string render(const GroupFormula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation over Sym(omega)

namespace {

using perm::Permutation;

constexpr std::size_t kMaxEnumeratedOmega = 8;

class GroupEvaluator {
 public:
  GroupEvaluator(std::size_t omega, std::size_t slots) : omega_(omega), env_(slots) {}

  void set(Var v, Permutation p) { env_[v] = std::move(p); }

  bool eval(const GroupFormula& f) {
    const auto& v = f.vars();
    const auto& c = f.children();
    switch (f.kind()) {
      case Kind::kTrue: return true;
      case Kind::kFalse: return false;
      case Kind::kEq: return env_[v[0]] == env_[v[1]];
      case Kind::kMul: return env_[v[0]] * env_[v[1]] == env_[v[2]];
      case Kind::kIsOne: return env_[v[0]].is_identity();
      case Kind::kNot: return !eval(c[0]);
      case Kind::kAnd:
        for (const auto& g : c)
          if (!eval(g)) return false;
        return true;
      case Kind::kOr:
        for (const auto& g : c)
          if (eval(g)) return true;
        return false;
      case Kind::kImplies: return !eval(c[0]) || eval(c[1]);
      case Kind::kIff: return eval(c[0]) == eval(c[1]);
      case Kind::kExists:
      case Kind::kForall: return quantifier(f);
    }
    return false;
  }

 private:
  // The value a conjunct forces on v, if the conjunct pins it down.
  std::optional<Permutation> solve(const GroupFormula& g, Var v) const {
    const auto& a = g.vars();
    switch (g.kind()) {
      case Kind::kIsOne:
        if (a[0] == v) return Permutation::identity(omega_);
        break;
      case Kind::kEq:
        if (a[0] == v && a[1] != v) return env_[a[1]];
        if (a[1] == v && a[0] != v) return env_[a[0]];
        break;
      case Kind::kMul: {
        const int hits = (a[0] == v) + (a[1] == v) + (a[2] == v);
        if (hits != 1) break;
        if (a[2] == v) return env_[a[0]] * env_[a[1]];
        if (a[0] == v) return env_[a[2]] * env_[a[1]].inverse();
        return env_[a[0]].inverse() * env_[a[2]];
      }
      default: break;
    }
    return std::nullopt;
  }

  std::optional<Permutation> solve_conjuncts(const GroupFormula& g, Var v) const {
    if (g.kind() == Kind::kAnd) {
      for (const auto& c : g.children())
        if (auto p = solve(c, v)) return p;
      return std::nullopt;
    }
    return solve(g, v);
  }

  const std::vector<Permutation>& all_perms() {
    if (perms_.empty()) {
      if (omega_ > kMaxEnumeratedOmega)
        throw Error("quantifier over Sym(" + std::to_string(omega_) + ") is too large to enumerate");
      std::vector<perm::Point> p(omega_);
      std::iota(p.begin(), p.end(), 0u);
      do perms_.emplace_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    return perms_;
  }

  bool quantifier(const GroupFormula& f) {
    const Var v = f.bound();
    const auto& body = f.children()[0];
    const bool existential = f.kind() == Kind::kExists;
    Permutation saved = env_[v];
    std::optional<bool> result;
    // E v (... & v = t & ...) and A v (v = t -> ...) need only the forced value.
    if (existential) {
      if (auto p = solve_conjuncts(body, v)) {
        env_[v] = *p;
        result = eval(body);
      }
    } else if (body.kind() == Kind::kImplies) {
      if (auto p = solve_conjuncts(body.children()[0], v)) {
        env_[v] = *p;
        result = eval(body);
      }
    }
    if (!result) {
      result = !existential;
      for (const auto& p : all_perms()) {
        env_[v] = p;
        if (eval(body) == existential) {
          result = existential;
          break;
        }
      }
    }
    env_[v] = std::move(saved);
    return *result;
  }

  std::size_t omega_;
  std::vector<Permutation> env_;
  std::vector<Permutation> perms_;
};

}  // namespace

bool eval_group(const GroupFormula& f, std::size_t omega, const perm::PermTuple& assignment) {
  if (assignment.arity() > 0 && assignment.ground_size() != omega)
    throw Error("assignment acts on " + std::to_string(assignment.ground_size()) + " points, expected " +
                std::to_string(omega));
  for (Var v : free_vars(f))
    if (v >= assignment.arity())
      throw Error("free variable x" + std::to_string(v) + " is not covered by an assignment of arity " +
                  std::to_string(assignment.arity()));
  const long m = max_var(f);
  GroupEvaluator ev(omega, static_cast<std::size_t>(std::max<long>(m + 1, 0)));
  for (std::size_t i = 0; i < assignment.arity() && static_cast<long>(i) <= m; ++i)
    ev.set(static_cast<Var>(i), assignment[i]);
  return ev.eval(f);
}

}  // namespace symq::logic
