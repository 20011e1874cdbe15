#pragma once

// Group-theoretic formulas used to interpret sets, cardinals and censuses
// inside a quotient of a symmetric group.
//
// Every constructor takes a `base`: the least variable index it may bind.
// Arguments must lie below base. Bound variables are numbered upward from
// base in a fixed way, so two calls with equal arguments and base build the
// same formula, and the library returns the shared node. This keeps formulas
// such as disj, whose unfolded trees have millions of atoms, small in memory.

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "symq/alt5.hpp"
#include "symq/group_formula.hpp"

namespace symq::logic {

using Vars = std::vector<Var>;

class FormulaLibrary {
 public:
  // Conjunction of x_i * x_j = x_k over all products a_i a_j = a_k in g.
  GroupFormula diag(const alt5::GroupTable& g, const Vars& x);
  GroupFormula alt5(const Vars& x);  // diag over A(5); x has 60 entries

  GroupFormula set(Var x, Var base);  // x * x = 1
  GroupFormula comm(const Vars& x, const Vars& y, Var base);
  GroupFormula conj(const Vars& x, const Vars& y, Var base);  // some z with x^z = y
  GroupFormula indec(const Vars& x, Var base);
  GroupFormula disj1(const Vars& x, const Vars& y, Var base);
  GroupFormula disj_prime(Var x, Var y, Var base);
  GroupFormula disj(Var x, Var y, Var base);
  GroupFormula subset(Var x, Var y, Var base);
  GroupFormula sameset(Var x, Var y, Var base);
  GroupFormula set_union(Var x, Var y, Var z, Var base);
  GroupFormula set_intersect(Var x, Var y, Var z, Var base);
  GroupFormula union_n(const Vars& x, Var y, Var base);
  GroupFormula map(Var x, Var y, Var z, Var base);

  GroupFormula max(Var base);
  GroupFormula disj_n(const Vars& x, const Vars& y, Var base);
  GroupFormula restr_n(const Vars& x, const Vars& y, Var base);
  GroupFormula is_one_n(const Vars& x);
  GroupFormula compat_n(const Vars& x, const Vars& y, Var base);
  GroupFormula pure_n(const Vars& x, Var base);
  GroupFormula iso_n(const Vars& x, const Vars& y, Var base);
  GroupFormula samecard(Var x, Var y, Var base);
  GroupFormula lesseq(Var x, Var y, Var base);
  GroupFormula eq1(Var x1, Var x2, Var base);
  GroupFormula eq(Var x1, Var x2);
  GroupFormula prod1(Var x1, Var x2, Var x3, Var base);
  GroupFormula prod(Var x1, Var x2, Var x3);
  GroupFormula proj1_n(const Vars& x, const Vars& y, Var base);  // |x| = |y| + 1
  GroupFormula proj_n(const Vars& x, const Vars& y, Var base);   // |x| = |y| + 1
  GroupFormula app_n(const Vars& x, const Vars& y, Var z, Var base);
  GroupFormula kappa_is_aleph0(Var base);
  GroupFormula irreducible_n(const Vars& x, Var base);
  GroupFormula transposition(Var base);

 private:
  using Key = std::tuple<std::string, Vars, Var>;
  template <class Fn>
  GroupFormula memo(const char* name, Vars args, Var base, Fn&& build);

  // x_i = y_i * z_i for every i.
  GroupFormula pointwise(const Vars& x, const Vars& y, const Vars& z);
  GroupFormula product_is(Var x, const Vars& factors, Var base);

  std::map<Key, GroupFormula> memo_;
};

struct LibraryParams {
  std::size_t n = 1;  // tuple length for the _n formulas and comm/conj
  Vars args;          // free variables; defaults to x0, x1, ... in order
};

// Number of free variables of a named constructor for the given n.
std::size_t library_arity(std::string_view name, std::size_t n);
std::vector<std::string> library_names();

// Builds a named formula, binding variables above its arguments.
GroupFormula formula_library(std::string_view name, const LibraryParams& params = {});

}  // namespace symq::logic
