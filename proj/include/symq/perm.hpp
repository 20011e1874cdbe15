#pragma once

// Finite permutations, tuples of permutations, orbit types and censuses.
//
// Permutations act on the right: p * q first applies p, then q, so that
// x^(pq) = (x^p)^q. Conjugation is g^h = h^-1 g h.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symq

namespace symq::perm {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  // Throws Error unless images is a bijection of {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);
  // Disjoint-cycle text, e.g. "(0 1)(2 3)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t ground_size);

  std::size_t ground_size() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate(const Permutation& h) const;

  bool is_identity() const;
  std::vector<Point> support() const;
  std::size_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

class PermTuple {
 public:
  PermTuple() = default;
  PermTuple(std::size_t ground_size, std::vector<Permutation> entries);

  static PermTuple identity(std::size_t ground_size, std::size_t arity);
  // Comma-separated cycle notations. Empty text gives the arity-0 tuple.
  static PermTuple parse(std::string_view text, std::size_t ground_size);

  std::size_t arity() const { return entries_.size(); }
  std::size_t ground_size() const { return ground_size_; }
  const Permutation& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Permutation>& entries() const { return entries_; }

  std::vector<Point> support() const;
  bool is_identity() const;
  PermTuple conjugate(const Permutation& h) const;
  std::string to_string() const;

  auto operator<=>(const PermTuple&) const = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<Permutation> entries_;
};

// Orbits of the group generated by the tuple, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const PermTuple& t);

// Agrees with t on `points` and fixes everything else; points must be a union of orbits.
PermTuple restrict(const PermTuple& t, const std::vector<Point>& points);

// Entrywise product t1[i] * t2[i].
PermTuple pointwise_product(const PermTuple& t1, const PermTuple& t2);

// Coordinate maps: entry j names the source coordinate of output coordinate j,
// or kIdentityCoord for an inserted identity coordinate.
inline constexpr std::size_t kIdentityCoord = std::numeric_limits<std::size_t>::max();
using CoordMap = std::vector<std::size_t>;

PermTuple reindex(const PermTuple& t, const CoordMap& map);

// Isomorphism class of a transitive action of an n-tuple on m points.
// The certificate lists, generator by generator, the images of 0..m-1 under
// the lexicographically least breadth-first relabeling.
struct OrbitType {
  std::uint32_t arity = 0;
  std::uint32_t degree = 0;
  std::vector<std::uint16_t> certificate;

  PermTuple to_tuple() const;
  std::uint64_t hash() const;
  std::string hash_string() const;
  bool is_trivial() const { return degree == 1; }

  auto operator<=>(const OrbitType&) const = default;
};

OrbitType canonical_type(const PermTuple& t, const std::vector<Point>& orbit);

// canonical_type plus the relabeling: labeling[l] is the orbit point given label l.
std::pair<OrbitType, std::vector<Point>> canonical_labeling(const PermTuple& t,
                                                            const std::vector<Point>& orbit);

// The identity type of the given arity on one point.
OrbitType trivial_type(std::size_t arity);

enum class TrivialConvention { kInclude, kExclude };

class Census {
 public:
  Census() = default;
  Census(std::size_t arity, TrivialConvention convention)
      : arity_(arity), convention_(convention) {}

  void add(const OrbitType& type, std::size_t count = 1);

  std::size_t arity() const { return arity_; }
  TrivialConvention convention() const { return convention_; }
  const std::map<OrbitType, std::size_t>& counts() const& { return counts_; }
  std::map<OrbitType, std::size_t> counts() && { return std::move(counts_); }
  std::size_t count(const OrbitType& type) const;
  std::size_t weight() const;
  std::string to_string() const;

  auto operator<=>(const Census&) const = default;

 private:
  std::size_t arity_ = 0;
  TrivialConvention convention_ = TrivialConvention::kInclude;
  std::map<OrbitType, std::size_t> counts_;
};

Census census(const PermTuple& t, TrivialConvention convention = TrivialConvention::kInclude);

// A witness h with t1^h = t2, or nullopt when none exists.
std::optional<Permutation> tuples_conjugate(const PermTuple& t1, const PermTuple& t2);

// A tuple on ground_size points whose census is c.
PermTuple realize(const Census& c, std::size_t ground_size);

// Census of the reindexed tuple, computed from the census alone.
Census census_reindex(const Census& c, const CoordMap& map);

}  // namespace symq::perm
