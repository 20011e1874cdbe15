#pragma once

// The finite analogue of the census structure for Sym(omega) with no small
// sets: IS_n holds every transitive n-generated action on at most omega
// points, Card holds 0..omega, and F_n holds every census of total weight
// omega (or, when trivial orbits are not recorded, of weight at most omega).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symq/m_formula.hpp"
#include "symq/perm.hpp"

namespace symq::logic {

struct MFinLimits {
  std::size_t max_omega = 5;
  std::size_t max_arity = 4;
  // Upper bound on tuples examined while listing IS_n.
  std::uint64_t tuple_budget = 20'000'000;
};

class MFinModel {
 public:
  MFinModel(std::size_t omega, std::size_t max_arity, perm::TrivialConvention convention,
            const MFinLimits& limits = {});
  MFinModel(const MFinModel&) = delete;
  MFinModel& operator=(const MFinModel&) = delete;

  std::size_t omega() const { return omega_; }
  std::size_t max_arity() const { return types_.size() - 1; }
  perm::TrivialConvention convention() const { return convention_; }

  const std::vector<perm::OrbitType>& types(std::size_t n) const { return types_.at(n); }
  const std::vector<perm::Census>& censuses(std::size_t n) const { return censuses_.at(n); }
  std::uint32_t type_id(const perm::OrbitType& t) const;  // throws if absent
  std::uint32_t census_id(const perm::Census& c) const;   // throws if absent

  // Id in F_{map.size()} of the reindexed census. Memoized and thread-safe.
  std::uint32_t reindex(std::size_t n, std::uint32_t id, const perm::CoordMap& map) const;
  std::uint32_t proj(std::size_t n, std::uint32_t id) const;  // n >= 1
  // Ids in F_{n+1} whose projection is census id of F_n.
  const std::vector<std::uint32_t>& fiber(std::size_t n, std::uint32_t id) const;

  bool eq(std::uint32_t h, bool weighted) const;    // h in F_2
  bool prod(std::uint32_t h, bool weighted) const;  // h in F_3
  bool eq1(std::size_t n, std::uint32_t t, const perm::CoordMap& map) const;
  bool prod1(std::size_t n, std::uint32_t t, const perm::CoordMap& map) const;
  bool proj1(std::size_t n, std::uint32_t t_prime, std::size_t m, std::uint32_t t, const perm::CoordMap& map) const;
  std::uint32_t app(std::size_t n, std::uint32_t h, std::uint32_t t) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const;
  };

  std::size_t omega_;
  perm::TrivialConvention convention_;
  std::vector<std::vector<perm::OrbitType>> types_;
  std::vector<std::map<perm::OrbitType, std::uint32_t>> type_index_;
  std::vector<std::vector<perm::Census>> censuses_;
  std::vector<std::map<perm::Census, std::uint32_t>> census_index_;
  std::vector<std::vector<std::vector<std::uint32_t>>> fibers_;  // fibers_[n][id]
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> reindex_memo_;
};

std::shared_ptr<const MFinModel> build_m_fin(std::size_t omega, std::size_t max_arity,
                                             perm::TrivialConvention convention = perm::TrivialConvention::kInclude,
                                             const MFinLimits& limits = {});

// A value of some sort: an index into IS_n or F_n, or a cardinal 0..omega.
struct MValue {
  Sort sort;
  std::uint32_t value = 0;
};

using MAssignment = std::vector<std::pair<std::string, MValue>>;

// Truth of f in the model. Every free variable must be assigned; later
// entries shadow earlier ones with the same name.
bool eval_m(const MFormula& f, const MFinModel& model, const MAssignment& assignment);

}  // namespace symq::logic
