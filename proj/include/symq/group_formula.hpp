#pragma once

// First-order formulas in the language of groups, with atoms restricted to
// x_i = x_j, x_i * x_j = x_k and x_i = 1. Longer product terms are flattened
// into fresh existentially bound variables by the parser.
//
// Formulas are immutable and share subtrees, so library constructors can
// reuse large subformulas without copying them.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symq/perm.hpp"

namespace symq::logic {

using Var = std::uint32_t;

class GroupFormula {
 public:
  enum class Kind { kTrue, kFalse, kEq, kMul, kIsOne, kNot, kAnd, kOr, kImplies, kIff, kExists, kForall };

  GroupFormula();  // true

  static GroupFormula truth(bool value);
  static GroupFormula eq(Var a, Var b);
  static GroupFormula mul(Var a, Var b, Var c);  // a * b = c
  static GroupFormula is_one(Var a);
  static GroupFormula negate(GroupFormula f);
  // A single operand is returned unchanged; none gives true (and) or false (or).
  static GroupFormula all(std::vector<GroupFormula> fs);
  static GroupFormula any(std::vector<GroupFormula> fs);
  static GroupFormula implies(GroupFormula a, GroupFormula b);
  static GroupFormula iff(GroupFormula a, GroupFormula b);
  static GroupFormula exists(Var v, GroupFormula body);
  static GroupFormula forall(Var v, GroupFormula body);
  // Quantifier prefix, outermost first.
  static GroupFormula exists(const std::vector<Var>& vs, GroupFormula body);
  static GroupFormula forall(const std::vector<Var>& vs, GroupFormula body);

  Kind kind() const;
  // Atom arguments (1, 2 or 3 of them) or the bound variable of a quantifier.
  const std::vector<Var>& vars() const;
  Var bound() const { return vars().front(); }
  const std::vector<GroupFormula>& children() const;

  bool is_atom() const;
  bool is_quantifier() const { return kind() == Kind::kExists || kind() == Kind::kForall; }

  // Identity of the shared node; equal ids imply equal formulas.
  const void* id() const { return node_.get(); }

  friend bool operator==(const GroupFormula& a, const GroupFormula& b);

 public:
  struct Node;  // opaque

 private:
  explicit GroupFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<Var> free_vars(const GroupFormula& f);
// Largest variable index occurring anywhere, or -1 for none.
long max_var(const GroupFormula& f);
// Longest chain of nested quantifiers.
std::size_t quantifier_depth(const GroupFormula& f);
// Distinct shared nodes, and the size of the fully unfolded tree (saturating).
std::size_t dag_size(const GroupFormula& f);
std::uint64_t tree_size(const GroupFormula& f);

// Grammar, loosest binding first:
//   formula := imp ('<->' imp)*
//   imp     := or ('->' imp)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | ('E' | 'A') var '(' formula ')' | '(' formula ')'
//            | 'true' | 'false' | term ('=' | '!=') term
//   term    := factor ('*' factor)*     factor := var | '1'     var := 'x' digits
// A chain of two or more '<->' groups to the left.
GroupFormula parse_group_formula(std::string_view text);

// The equation (product of lhs) = (product of rhs) in atomic form. Empty
// sides stand for 1. Products longer than two factors are split through
// variables fresh, fresh + 1, ..., bound existentially around the result;
// fresh is advanced past the ones used.
GroupFormula product_equation(std::vector<Var> lhs, std::vector<Var> rhs, Var& fresh);

std::string render(const GroupFormula& f);

// Truth in Sym(omega) with x_i assigned to assignment[i]. Quantifiers range
// over all omega! permutations; a bound variable fixed by a product or
// equality conjunct is solved for instead of enumerated.
bool eval_group(const GroupFormula& f, std::size_t omega, const perm::PermTuple& assignment);

}  // namespace symq::logic
