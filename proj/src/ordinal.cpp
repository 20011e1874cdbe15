#include "symq/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace symq::ord {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw Error("ordinal coefficient overflow");
  return a + b;
}

}  // namespace

// ---------------------------------------------------------------- OrdSmall

OrdSmall OrdSmall::nat(std::uint64_t n) {
  OrdSmall r;
  if (n > 0) r.terms_.push_back({OrdSmall{}, n});
  return r;
}

OrdSmall OrdSmall::omega_power(const OrdSmall& exponent, std::uint64_t coeff) {
  OrdSmall r;
  if (coeff > 0) r.terms_.push_back({exponent, coeff});
  return r;
}

bool OrdSmall::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::optional<std::uint64_t> OrdSmall::as_nat() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coeff;
  return std::nullopt;
}

std::strong_ordering operator<=>(const OrdSmall& a, const OrdSmall& b) {
  const auto n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

OrdSmall operator+(const OrdSmall& a, const OrdSmall& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms_.front();
  OrdSmall r;
  std::size_t i = 0;
  while (i < a.terms_.size() && a.terms_[i].exponent > lead.exponent) r.terms_.push_back(a.terms_[i++]);
  std::size_t j = 0;
  if (i < a.terms_.size() && a.terms_[i].exponent == lead.exponent) {
    r.terms_.push_back({lead.exponent, checked_add(a.terms_[i].coeff, lead.coeff)});
    j = 1;
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
  return r;
}

OrdSmall subtract_left(const OrdSmall& b, const OrdSmall& g) {
  if (b > g) throw Error("subtract_left: " + b.to_string() + " exceeds " + g.to_string());
  std::size_t i = 0;
  while (i < b.terms_.size() && b.terms_[i].exponent == g.terms_[i].exponent &&
         b.terms_[i].coeff == g.terms_[i].coeff)
    ++i;
  OrdSmall r;
  if (i == g.terms_.size()) return r;
  std::size_t from = i;
  if (i < b.terms_.size() && b.terms_[i].exponent == g.terms_[i].exponent) {
    r.terms_.push_back({g.terms_[i].exponent, g.terms_[i].coeff - b.terms_[i].coeff});
    from = i + 1;
  }
  r.terms_.insert(r.terms_.end(), g.terms_.begin() + static_cast<std::ptrdiff_t>(from), g.terms_.end());
  return r;
}

std::string OrdSmall::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (auto e = t.exponent.as_nat()) {
      if (*e != 1) out += "^" + std::to_string(*e);
    } else {
      out += "^(" + t.exponent.to_string() + ")";
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

// ---------------------------------------------------------------- OrdOmega

OrdOmega::OrdOmega(const OrdSmall& s) {
  if (!s.is_zero()) terms_.push_back({Level{0, 0}, s});
}

OrdOmega OrdOmega::big_omega_power(std::uint32_t n, const OrdSmall& c) {
  OrdOmega r;
  if (!c.is_zero()) r.terms_.push_back({Level{0, n}, c});
  return r;
}

OrdOmega OrdOmega::omega_shift(const OrdOmega& a) {
  OrdOmega r = a;
  for (auto& t : r.terms_) ++t.level.k;
  return r;
}

OrdOmega OrdOmega::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff.is_zero()) throw Error("zero coefficient in normal form");
    if (i > 0 && !(terms[i].level < terms[i - 1].level)) throw Error("levels must decrease strictly");
  }
  OrdOmega r;
  r.terms_ = std::move(terms);
  return r;
}

bool OrdOmega::is_successor() const {
  return !terms_.empty() && terms_.back().level == Level{0, 0} && terms_.back().coeff.is_successor();
}

std::uint32_t OrdOmega::depth() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.level.k);
  return d;
}

std::strong_ordering operator<=>(const OrdOmega& a, const OrdOmega& b) {
  const auto n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].level <=> b.terms_[i].level; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

OrdOmega operator+(const OrdOmega& a, const OrdOmega& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms_.front();
  OrdOmega r;
  std::size_t i = 0;
  while (i < a.terms_.size() && a.terms_[i].level > lead.level) r.terms_.push_back(a.terms_[i++]);
  std::size_t j = 0;
  if (i < a.terms_.size() && a.terms_[i].level == lead.level) {
    r.terms_.push_back({lead.level, a.terms_[i].coeff + lead.coeff});
    j = 1;
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
  return r;
}

OrdOmega subtract_left(const OrdOmega& b, const OrdOmega& g) {
  if (b > g) throw Error("subtract_left: " + b.to_string() + " exceeds " + g.to_string());
  const auto& bt = b.terms();
  const auto& gt = g.terms();
  std::size_t i = 0;
  while (i < bt.size() && bt[i].level == gt[i].level && bt[i].coeff == gt[i].coeff) ++i;
  std::vector<OrdOmega::Term> out;
  std::size_t from = i;
  if (i < bt.size() && i < gt.size() && bt[i].level == gt[i].level) {
    out.push_back({gt[i].level, subtract_left(bt[i].coeff, gt[i].coeff)});
    from = i + 1;
  }
  out.insert(out.end(), gt.begin() + static_cast<std::ptrdiff_t>(from), gt.end());
  return OrdOmega::from_terms(std::move(out));
}

OrdSmall coeff(const OrdOmega& a, std::uint32_t n) {
  for (const auto& t : a.terms())
    if (t.level == Level{0, n}) return t.coeff;
  return {};
}

OrdOmega tail(const OrdOmega& a, std::uint32_t n) {
  std::vector<OrdOmega::Term> out;
  for (const auto& t : a.terms())
    if (t.level > Level{0, n}) out.push_back(t);
  return OrdOmega::from_terms(std::move(out));
}

OrdOmega omega_part(const OrdOmega& a) {
  std::vector<OrdOmega::Term> out;
  for (const auto& t : a.terms())
    if (t.level.k > 0) out.push_back({Level{t.level.k - 1, t.level.m}, t.coeff});
  return OrdOmega::from_terms(std::move(out));
}

std::string to_string(Cofinality c) {
  switch (c) {
    case Cofinality::kZero: return "0";
    case Cofinality::kOne: return "1";
    case Cofinality::kOmega: return "w";
    case Cofinality::kBigOmega: return "W";
  }
  return "?";
}

Cofinality cf(const OrdSmall& a) {
  if (a.is_zero()) return Cofinality::kZero;
  return a.is_successor() ? Cofinality::kOne : Cofinality::kOmega;
}

Cofinality cf(const OrdOmega& a) {
  if (a.is_zero()) return Cofinality::kZero;
  const auto& last = a.terms().back();
  if (last.level == Level{0, 0}) return cf(last.coeff);
  if (last.coeff.is_limit()) return Cofinality::kOmega;
  // Ω^e with e a successor exponent has cofinality Ω; e = ω·k is a limit of countable cofinality.
  return last.level.m > 0 ? Cofinality::kBigOmega : Cofinality::kOmega;
}

OrdSmall upper(const OrdOmega& a, std::uint32_t n) {
  switch (cf(tail(a, n))) {
    case Cofinality::kZero: return OrdSmall::nat(1);
    case Cofinality::kOne: return OrdSmall::nat(2);
    case Cofinality::kOmega: return OrdSmall::omega();
    case Cofinality::kBigOmega: return {};
  }
  return {};
}

bool sim_k(const OrdOmega& a, const OrdOmega& b, std::uint32_t k) {
  for (std::uint32_t l = 0; l <= k; ++l)
    if (coeff(a, l) != coeff(b, l) || upper(a, l) != upper(b, l)) return false;
  return true;
}

bool sim_all(const OrdOmega& a, const OrdOmega& b) {
  std::uint32_t top = 0;
  for (const auto* x : {&a, &b})
    for (const auto& t : x->terms())
      if (t.level.k == 0) top = std::max(top, t.level.m);
  // Above the highest finite level both tails are just Ω^ω·α_ω.
  return sim_k(a, b, top + 1);
}

int canonical_clause(const OrdOmega& a, std::uint32_t k) {
  for (const auto& t : a.terms())
    if (t.level.k == 0 && t.level.m > k) return 1;
  const OrdOmega w = omega_part(a);
  if (w.is_zero()) return 0;
  if (w.is_successor()) return 2;
  return cf(w) == Cofinality::kOmega ? 3 : 4;
}

OrdOmega canonical_k(const OrdOmega& a, std::uint32_t k) {
  OrdSmall top;
  switch (canonical_clause(a, k)) {
    case 1:
      // Least level above k carrying a nonzero coefficient.
      for (const auto& t : a.terms())
        if (t.level.k == 0 && t.level.m > k) top = t.coeff;
      break;
    case 2:
    case 3: top = OrdSmall::omega(); break;
    // α_ω of cofinality Ω: any successor keeps cf(β[l]) = Ω, so 1 is the least choice.
    case 4: top = OrdSmall::nat(1); break;
    default: break;
  }
  std::vector<OrdOmega::Term> out;
  if (!top.is_zero()) out.push_back({Level{0, k + 1}, top});
  for (const auto& t : a.terms())
    if (t.level.k == 0 && t.level.m <= k) out.push_back(t);
  return OrdOmega::from_terms(std::move(out));
}

OrdOmega gamma(const OrdOmega& a, const std::vector<OrdOmega>& set) {
  const OrdOmega one = OrdOmega::nat(1);
  OrdOmega start;
  for (const auto& g : set)
    if (g < a) start = std::max(start, g + one);
  return subtract_left(start, a) + one;
}

namespace {

// x with x + 1 = a, for a successor a.
OrdOmega predecessor(const OrdOmega& a) {
  if (!a.is_successor()) throw Error("predecessor of a non-successor " + a.to_string());
  const auto& small = a.terms().back().coeff.terms();
  OrdSmall c;
  for (std::size_t i = 0; i + 1 < small.size(); ++i) c = c + OrdSmall::omega_power(small[i].exponent, small[i].coeff);
  c = c + OrdSmall::nat(small.back().coeff - 1);
  std::vector<OrdOmega::Term> terms(a.terms().begin(), a.terms().end() - 1);
  if (!c.is_zero()) terms.push_back({Level{0, 0}, c});
  return OrdOmega::from_terms(std::move(terms));
}

}  // namespace

std::vector<MapEntry> build_map(const OrdOmega& alpha, const OrdOmega& beta, std::vector<OrdOmega> set,
                                std::uint32_t k) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (const auto& a : set)
    if (!(a < alpha)) throw Error("build_map: " + a.to_string() + " is not below " + alpha.to_string());
  if (!sim_k(alpha, beta, k + 1)) throw Error("build_map: the two ordinals are not ~_(k+1)");

  // α = α' + ξ and β = β' + ξ with α', β' multiples of Ω^(k+2).
  const OrdOmega alpha_head = tail(alpha, k + 1);
  const OrdOmega beta_head = tail(beta, k + 1);
  const OrdOmega one = OrdOmega::nat(1);

  // Below α' every image stays under Ω^(k+2) <= β'; finitely many points need no block structure.
  std::vector<MapEntry> out;
  OrdOmega next;  // F(previous) + 1
  for (const auto& a : set) {
    OrdOmega image;
    if (a < alpha_head) {
      image = next + predecessor(canonical_k(gamma(a, set), k));
    } else {
      image = beta_head + subtract_left(alpha_head, a);
    }
    out.push_back({a, image});
    next = image + one;
  }

  std::vector<OrdOmega> images;
  for (const auto& e : out) images.push_back(e.to);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i].to < beta) || (i > 0 && !(out[i - 1].to < out[i].to)))
      throw Error("build_map: image of " + out[i].from.to_string() + " out of order");
    if (!sim_k(gamma(out[i].from, set), gamma(out[i].to, images), k))
      throw Error("build_map: gamma mismatch at " + out[i].from.to_string());
  }
  if (!sim_k(gamma(alpha, set), gamma(beta, images), k)) throw Error("build_map: gamma mismatch at the top");
  return out;
}

// ---------------------------------------------------------------- text form

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OrdSmall small_sum() {
    OrdSmall r = small_summand();
    while (accept('+')) r = r + small_summand();
    return r;
  }

  OrdOmega big_sum(std::uint32_t max_depth) {
    OrdOmega r = big_summand(max_depth);
    while (accept('+')) r = r + big_summand(max_depth);
    return r;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected text");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("ordinal syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
    }
    return v;
  }

  // NUM | '(' small ')' | 'w' ['^' exponent] ['*' NUM]
  OrdSmall small_summand() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return OrdSmall::nat(number());
    if (accept('(')) {
      OrdSmall r = small_sum();
      expect(')');
      return r;
    }
    if (!accept('w')) fail("expected a number, 'w' or '('");
    OrdSmall e = OrdSmall::nat(1);
    if (accept('^')) {
      if (accept('(')) {
        e = small_sum();
        expect(')');
      } else if (accept('w')) {
        e = OrdSmall::omega();
      } else {
        e = OrdSmall::nat(number());
      }
    }
    std::uint64_t c2 = 1;
    if (accept('*')) c2 = number();
    return OrdSmall::omega_power(e, c2);
  }

  // 'W' ['^' (NUM | 'w')] ['*' coefficient] | small summand
  OrdOmega big_summand(std::uint32_t max_depth) {
    if (!accept('W')) return OrdOmega(small_summand());
    bool shifted = false;
    std::uint32_t level = 1;
    if (accept('^')) {
      if (accept('w')) {
        shifted = true;
      } else {
        const auto n = number();
        if (n > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
        level = static_cast<std::uint32_t>(n);
      }
    }
    if (shifted) {
      if (max_depth == 0) fail("nesting deeper than the configured depth");
      OrdOmega inner = OrdOmega::nat(1);
      if (accept('*')) {
        if (accept('{')) {
          inner = big_sum(max_depth - 1);
          expect('}');
        } else {
          inner = OrdOmega(small_summand());
        }
      }
      return OrdOmega::omega_shift(inner);
    }
    OrdSmall c = OrdSmall::nat(1);
    if (accept('*')) c = small_summand();
    return OrdOmega::big_omega_power(level, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrdSmall OrdSmall::parse(std::string_view text) {
  Parser p(text);
  OrdSmall r = p.small_sum();
  p.finish();
  return r;
}

OrdOmega OrdOmega::parse(std::string_view text, std::uint32_t max_depth) {
  Parser p(text);
  OrdOmega r = p.big_sum(max_depth);
  p.finish();
  return r;
}

std::string OrdOmega::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  const OrdOmega w = omega_part(*this);
  if (!w.is_zero()) parts.push_back(w == OrdOmega::nat(1) ? "W^w" : "W^w*{" + w.to_string() + "}");
  for (const auto& t : terms_) {
    if (t.level.k > 0) continue;
    if (t.level.m == 0) {
      parts.push_back(t.coeff.to_string());
      continue;
    }
    std::string s = t.level.m == 1 ? "W" : "W^" + std::to_string(t.level.m);
    if (auto n = t.coeff.as_nat()) {
      if (*n != 1) s += "*" + std::to_string(*n);
    } else {
      s += "*(" + t.coeff.to_string() + ")";
    }
    parts.push_back(s);
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

// ---------------------------------------------------------------- sampling

OrdSmall Sampler::small(int depth) {
  std::vector<OrdSmall> exps;
  const auto count = pick(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (depth > 1 && pick(6) == 0)
      exps.push_back(OrdSmall::omega_power(OrdSmall::omega()));
    else if (depth > 0 && pick(3) == 0)
      exps.push_back(OrdSmall::omega_power(OrdSmall::nat(1), 1 + pick(2)) + OrdSmall::nat(pick(3)));
    else
      exps.push_back(OrdSmall::nat(pick(4)));
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  OrdSmall r;
  for (const auto& e : exps) r = r + OrdSmall::omega_power(e, 1 + pick(4));
  return r;
}

OrdOmega Sampler::ordinal() {
  std::vector<Level> levels;
  const auto count = pick(5);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto r = pick(10);
    const std::uint32_t k = r < 6 ? 0 : (r < 9 ? 1 : 2);
    levels.push_back({k, static_cast<std::uint32_t>(pick(k == 0 ? 6 : 3))});
  }
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<OrdOmega::Term> terms;
  for (const auto& l : levels) {
    OrdSmall c = small();
    if (c.is_zero()) c = OrdSmall::nat(1 + pick(3));
    terms.push_back({l, c});
  }
  return OrdOmega::from_terms(std::move(terms));
}

OrdOmega Sampler::ordinal_at_least(std::uint32_t level) {
  OrdSmall c = small();
  if (c.is_zero()) c = OrdSmall::nat(1);
  OrdOmega head = pick(4) == 0 ? OrdOmega::omega_shift(OrdOmega::big_omega_power(static_cast<std::uint32_t>(pick(3)), c))
                               : OrdOmega::big_omega_power(level + static_cast<std::uint32_t>(pick(3)), c);
  return head + ordinal();
}

OrdSmall Sampler::small_below(const OrdSmall& a) {
  if (a.is_zero()) throw Error("nothing below 0");
  const auto& ts = a.terms();
  const auto i = pick(ts.size());
  OrdSmall r;
  for (std::size_t j = 0; j < i; ++j) r = r + OrdSmall::omega_power(ts[j].exponent, ts[j].coeff);
  r = r + OrdSmall::omega_power(ts[i].exponent, pick(ts[i].coeff));
  if (!ts[i].exponent.is_zero()) {
    const auto extra = pick(3);
    for (std::uint64_t j = 0; j < extra; ++j)
      r = r + OrdSmall::omega_power(small_below(ts[i].exponent), 1 + pick(4));
  }
  return r;
}

OrdOmega Sampler::below(const OrdOmega& a) {
  if (a.is_zero()) throw Error("nothing below 0");
  const auto& ts = a.terms();
  const auto i = pick(ts.size());
  std::vector<OrdOmega::Term> head(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(i));
  OrdOmega r = OrdOmega::from_terms(std::move(head));
  const Level top = ts[i].level;
  if (OrdSmall c = small_below(ts[i].coeff); !c.is_zero()) r = r + OrdOmega::from_terms({{top, c}});
  if (top == Level{0, 0}) return r;
  const auto extra = pick(3);
  for (std::uint64_t j = 0; j < extra; ++j) {
    Level l;
    if (top.m > 0 && pick(2) == 0) {
      l = {top.k, static_cast<std::uint32_t>(pick(top.m))};
    } else if (top.k > 0) {
      l = {static_cast<std::uint32_t>(pick(top.k)), static_cast<std::uint32_t>(pick(4))};
    } else {
      l = {0, static_cast<std::uint32_t>(pick(top.m))};
    }
    OrdSmall c = small();
    if (c.is_zero()) c = OrdSmall::nat(1);
    r = r + OrdOmega::from_terms({{l, c}});
  }
  return r;
}

OrdOmega Sampler::sim_mutant(const OrdOmega& a, std::uint32_t k) {
  const OrdOmega upper_part = tail(a, k);
  if (upper_part.is_zero()) return a;
  const OrdOmega low = subtract_left(upper_part, a);
  switch (pick(4)) {
    case 0: return canonical_k(a, k);
    case 1: return ordinal() + a;  // absorbed into the part above level k
    default:
      for (int attempt = 0; attempt < 20; ++attempt) {
        OrdOmega cand = tail(ordinal_at_least(k + 1), k) + low;
        if (sim_k(cand, a, k)) return cand;
      }
      return canonical_k(a, k);
  }
}

// ---------------------------------------------------------------- law checks

namespace {

void violation(Report& r, const std::string& what) {
  if (r.violations.size() < 20) r.violations.push_back(what);
}

}  // namespace

Report check_canonical_law(std::uint64_t seed, std::size_t instances) {
  Report r;
  r.name = "canonical representatives";
  Sampler s(seed);
  std::size_t clauses[5] = {};
  for (std::size_t i = 0; i < instances; ++i) {
    const auto k = static_cast<std::uint32_t>(s.pick(4));
    const OrdOmega a = s.pick(2) == 0 ? s.ordinal() : s.ordinal_at_least(k + 1);
    const OrdOmega c = canonical_k(a, k);
    ++clauses[canonical_clause(a, k)];
    const std::string tag = "k=" + std::to_string(k) + " a=" + a.to_string() + " canon=" + c.to_string();
    if (!(c < OrdOmega::big_omega_power(k + 2))) violation(r, "not below W^(k+2): " + tag);
    if (!sim_k(a, c, k)) violation(r, "not ~_k: " + tag);
    if (canonical_k(c, k) != c) violation(r, "not idempotent: " + tag);
    if (a < OrdOmega::big_omega_power(k + 1) && c != a) violation(r, "moved a small ordinal: " + tag);
  }
  r.fact("instances", std::to_string(instances));
  std::string counts;
  for (int c = 0; c < 5; ++c) counts += (c ? " " : "") + std::to_string(clauses[c]);
  r.fact("clause_counts", counts);
  return r;
}

Report check_absorption_law(std::uint64_t seed, std::size_t instances) {
  Report r;
  r.name = "absorption";
  Sampler s(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto k = static_cast<std::uint32_t>(s.pick(4));
    const OrdOmega a = s.ordinal_at_least(k + 1);
    const OrdOmega b = s.ordinal();
    if (!sim_k(a, b + a, k))
      violation(r, "k=" + std::to_string(k) + " a=" + a.to_string() + " b=" + b.to_string());
  }
  r.fact("instances", std::to_string(instances));
  return r;
}

Report property_sum_congruence(std::uint64_t seed, std::size_t instances) {
  Report r;
  r.name = "sum congruence";
  Sampler s(seed);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto k = static_cast<std::uint32_t>(s.pick(4));
    const auto len = s.pick(5);
    OrdOmega sa, sb;
    std::string tag = "k=" + std::to_string(k);
    for (std::uint64_t j = 0; j < len; ++j) {
      const OrdOmega a = s.ordinal();
      const OrdOmega b = s.sim_mutant(a, k);
      sa = sa + a;
      sb = sb + b;
      tag += " [" + a.to_string() + " ~ " + b.to_string() + "]";
    }
    if (sa != sb) ++distinct;
    if (!sim_k(sa, sb, k)) violation(r, tag);
  }
  r.fact("instances", std::to_string(instances));
  r.fact("distinct_sums", std::to_string(distinct));
  return r;
}

Report check_map_law(std::uint64_t seed, std::size_t instances) {
  Report r;
  r.name = "order-preserving maps";
  Sampler s(seed);
  std::size_t distinct = 0, points = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto k = static_cast<std::uint32_t>(s.pick(4));
    OrdOmega alpha = s.pick(4) == 0 ? s.ordinal() : s.ordinal_at_least(k + 2);
    if (alpha.is_zero()) alpha = OrdOmega::nat(1);
    const OrdOmega beta = s.sim_mutant(alpha, k + 1);
    std::vector<OrdOmega> set;
    const auto n = s.pick(21);
    for (std::uint64_t j = 0; j < n; ++j) set.push_back(s.below(alpha));
    std::string tag = "k=" + std::to_string(k) + " alpha=" + alpha.to_string() + " beta=" + beta.to_string();
    if (alpha != beta) ++distinct;
    try {
      const auto map = build_map(alpha, beta, set, k);
      points += map.size();
      // Recheck the contract independently of the builder's own checks.
      std::vector<OrdOmega> dom, img;
      for (const auto& e : map) {
        dom.push_back(e.from);
        img.push_back(e.to);
      }
      for (const auto& a : set)
        if (!std::binary_search(dom.begin(), dom.end(), a)) violation(r, "unmapped point: " + tag);
      for (std::size_t j = 0; j < map.size(); ++j) {
        if (!(img[j] < beta) || (j > 0 && !(img[j - 1] < img[j]))) violation(r, "order: " + tag);
        if (!sim_k(gamma(dom[j], dom), gamma(img[j], img), k))
          violation(r, "gamma at " + dom[j].to_string() + ": " + tag);
      }
      if (!sim_k(gamma(alpha, dom), gamma(beta, img), k)) violation(r, "gamma at top: " + tag);
    } catch (const Error& e) {
      violation(r, std::string(e.what()) + ": " + tag);
    }
  }
  r.fact("instances", std::to_string(instances));
  r.fact("distinct_pairs", std::to_string(distinct));
  r.fact("mapped_points", std::to_string(points));
  return r;
}

}  // namespace symq::ord
