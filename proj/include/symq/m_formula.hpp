#pragma once

// Many-sorted formulas over orbit types (IS_n), cardinal values (Card) and
// censuses (F_n).
//
// Besides the signature's projection Proj_n, census terms may be reindexed by
// an arbitrary coordinate map (selection, duplication, inserted identity
// coordinates). The same maps qualify the type-level relations Eq1, Prod1 and
// Proj1; the default map is the one the signature names.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symq/perm.hpp"

namespace symq::logic {

struct Sort {
  enum class Kind { kIS, kCard, kF };
  Kind kind = Kind::kCard;
  std::uint32_t arity = 0;  // unused for kCard

  static Sort is(std::uint32_t n) { return {Kind::kIS, n}; }
  static Sort card() { return {Kind::kCard, 0}; }
  static Sort f(std::uint32_t n) { return {Kind::kF, n}; }
  std::string to_string() const;  // "IS2", "Card", "F2"
  auto operator<=>(const Sort&) const = default;
};

class MTerm {
 public:
  enum class Kind { kVar, kZero, kReindex, kProj, kApp };

  static MTerm var(std::string name);
  static MTerm zero();                                  // the cardinal 0
  static MTerm reindex(MTerm h, perm::CoordMap map);    // census of the reindexed tuple
  static MTerm proj(MTerm h);                           // drop the last coordinate
  static MTerm app(MTerm h, MTerm t);                   // h(t)

  Kind kind() const;
  const std::string& name() const;
  const perm::CoordMap& map() const;
  const std::vector<MTerm>& args() const;

  friend bool operator==(const MTerm& a, const MTerm& b);

 public:
  struct Node;  // opaque

 private:
  explicit MTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class MFormula {
 public:
  enum class Kind {
    kTrue, kFalse,
    kEq1, kProd1, kProj1,  // type relations
    kEq, kProd,            // census relations
    kLess, kEqual,
    kNot, kAnd, kOr, kImplies, kIff, kExists, kForall
  };

  static MFormula truth(bool value);
  // Eq1 on IS_2 and Prod1 on IS_3, or on the types of a reindexed action.
  static MFormula eq1(MTerm t, perm::CoordMap map = {});
  static MFormula prod1(MTerm t, perm::CoordMap map = {});
  // t is the type of an orbit of t' restricted by map (default: first n coordinates).
  static MFormula proj1(MTerm t_prime, MTerm t, perm::CoordMap map = {});
  // Eq(h) for h in F_2 and Prod(h) for h in F_3. The weighted forms sum
  // orbit sizes times counts, as the signature does when kappa = aleph_0.
  static MFormula eq(MTerm h, bool weighted = false);
  static MFormula prod(MTerm h, bool weighted = false);
  static MFormula less(MTerm c, MTerm d);
  static MFormula equal(MTerm a, MTerm b);
  static MFormula negate(MFormula f);
  static MFormula all(std::vector<MFormula> fs);
  static MFormula any(std::vector<MFormula> fs);
  static MFormula implies(MFormula a, MFormula b);
  static MFormula iff(MFormula a, MFormula b);
  static MFormula exists(std::string var, Sort sort, MFormula body);
  static MFormula forall(std::string var, Sort sort, MFormula body);

  Kind kind() const;
  const std::vector<MTerm>& terms() const;
  const perm::CoordMap& map() const;
  bool weighted() const;
  const std::string& bound() const;
  Sort bound_sort() const;
  const std::vector<MFormula>& children() const;
  bool is_quantifier() const { return kind() == Kind::kExists || kind() == Kind::kForall; }

  friend bool operator==(const MFormula& a, const MFormula& b);

 public:
  struct Node;  // opaque

 private:
  explicit MFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using SortEnv = std::map<std::string, Sort>;

// Checks every atom and quantifier against the sorts; `free` gives the sorts
// of free variables. Returns the free variables actually used. Throws Error
// naming the offending subterm.
SortEnv sort_check(const MFormula& f, const SortEnv& free = {});
Sort sort_of(const MTerm& t, const SortEnv& env);

// Largest census or type arity mentioned, including reindex outputs.
std::uint32_t max_arity(const MFormula& f, const SortEnv& free = {});

// S-expression form, e.g. (exists (y1 F3) (and (Prod (reindex y1 0 0 2)) (= (proj y1) y0))).
std::string render(const MFormula& f);
std::string render(const MTerm& t);

}  // namespace symq::logic
