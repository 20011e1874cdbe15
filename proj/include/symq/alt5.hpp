#pragma once

// The alternating group A(5) and the finite checks built on it: subgroup
// enumeration, coset and product actions, the intersection lemmas, and the
// splitting of degree-30 and degree-60 actions into commuting factors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symq/perm.hpp"
#include "symq/report.hpp"

namespace symq::alt5 {

using Elem = std::uint16_t;

// Multiplication table of a permutation group. Element 0 is the identity;
// mul(a, b) first applies a, then b.
class GroupTable {
 public:
  explicit GroupTable(std::vector<perm::Permutation> elements);

  // G x G acting on two disjoint copies of the ground set; (i, j) has index i * |G| + j.
  static GroupTable direct_square(const GroupTable& g);

  std::size_t order() const { return elements_.size(); }
  const perm::Permutation& element(Elem a) const { return elements_[a]; }
  const std::vector<perm::Permutation>& elements() const { return elements_; }
  Elem mul(Elem a, Elem b) const { return product_[static_cast<std::size_t>(a) * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem x, Elem a) const { return mul(mul(inv(a), x), a); }  // a^-1 x a
  std::size_t element_order(Elem a) const;
  std::optional<Elem> index_of(const perm::Permutation& p) const;

 private:
  GroupTable() = default;
  std::vector<perm::Permutation> elements_;
  std::vector<Elem> product_;
  std::vector<Elem> inverse_;
  std::map<perm::Permutation, Elem> index_;
};

// Even permutations of {0..4} in lexicographic one-line order; a_0 = id.
const GroupTable& a5_table();
// All of S(5) in the same order.
const GroupTable& s5_table();
// Index in s5_table() of each element of a5_table().
const std::vector<Elem>& a5_in_s5();

struct Subgroup {
  std::vector<Elem> members;  // sorted

  std::size_t order() const { return members.size(); }
  bool contains(Elem a) const;
  auto operator<=>(const Subgroup&) const = default;
};

Subgroup closure(const GroupTable& g, const std::vector<Elem>& generators);
Subgroup conjugate(const GroupTable& g, const Subgroup& h, Elem a);  // a^-1 H a
std::size_t intersection_size(const Subgroup& h, const Subgroup& k);

// Every subgroup whose order divides `order_divides` and that is generated by
// elements of `candidates`. Found by repeatedly adjoining one candidate to a
// known subgroup until nothing new appears, so no generator-count bound is
// assumed. Sorted by (order, members).
std::vector<Subgroup> enumerate_subgroups(const GroupTable& g, std::size_t order_divides,
                                          const std::vector<Elem>& candidates);

std::vector<Subgroup> all_subgroups(const GroupTable& g);

struct CosetAction {
  Subgroup subgroup;
  std::vector<std::vector<Elem>> cosets;  // right cosets H x, ordered by least member
  std::vector<std::size_t> coset_of;      // element -> coset index
  perm::PermTuple action;                 // arity |G|: a_k acts by H x -> H x a_k

  std::size_t degree() const { return cosets.size(); }
};

CosetAction coset_action(const GroupTable& g, const Subgroup& h);

// Points x where x t_i t_j != x t_k for some a_i a_j = a_k.
std::vector<perm::Point> diag_exceptions(const GroupTable& g, const perm::PermTuple& t);

using symq::Report;

// For all proper H, K: min_a |H ∩ a^-1 K a| <= 3, and 3 only when |H| = |K| = 12.
Report check_lemma_3_3();

// Every subgroup of A(5) x A(5) of order 12 or 36 has a conjugate meeting the
// diagonal in other than 3 elements.
Report check_lemma_3_4();

// Right-regular f and s-twisted left-regular g on 60 points, for s in S(5)
// given as an index into s5_table(): x f_j = x a_j, x g_j = s^-1 a_j^-1 s x.
std::pair<perm::PermTuple, perm::PermTuple> twisted_regular_pair(Elem s);

// The commuting actions of A(5) on [A5:H] x [A5:K], the first moving only the
// H-coset, the second only the K-coset. Point (i, j) has index i * [A5:K] + j.
std::pair<perm::PermTuple, perm::PermTuple> product_action(const Subgroup& h, const Subgroup& k);

// Orbit lengths of the tuple, sorted ascending.
std::vector<std::size_t> orbit_lengths(const perm::PermTuple& t);

// Twisted pairs over all of S(5), and product actions over all proper (H, K).
Report check_lemma_3_5();

// Split t, acting as A(5) with degree 30 (resp. 60) on every nontrivial orbit,
// into commuting g, h with g * h = t. Fixed points of t stay fixed.
std::pair<perm::PermTuple, perm::PermTuple> decompose_30(const perm::PermTuple& t);
std::pair<perm::PermTuple, perm::PermTuple> decompose_60(const perm::PermTuple& t);

}  // namespace symq::alt5
