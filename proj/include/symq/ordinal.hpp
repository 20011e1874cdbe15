#pragma once

// Ordinals in base-Ω Cantor normal form, with Ω a purely formal regular base.
//
// OrdSmall is the coefficient ring: ordinals below ε0 in base-ω normal form,
// standing in for the ordinals below Ω. OrdOmega is a finite sum of terms
// Ω^(ω·k + m) · c with c a nonzero OrdSmall; the terms with k ≥ 1 make up
// Ω^ω · α_ω, so α_ω is again an OrdOmega of one less nesting depth.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symq/perm.hpp"
#include "symq/report.hpp"

namespace symq::ord {

class OrdSmall {
 public:
  struct Term;

  OrdSmall() = default;
  static OrdSmall nat(std::uint64_t n);
  static OrdSmall omega_power(const OrdSmall& exponent, std::uint64_t coeff = 1);
  static OrdSmall omega() { return omega_power(nat(1)); }
  static OrdSmall parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  std::optional<std::uint64_t> as_nat() const;
  std::string to_string() const;

  friend OrdSmall operator+(const OrdSmall& a, const OrdSmall& b);
  friend std::strong_ordering operator<=>(const OrdSmall& a, const OrdSmall& b);
  friend bool operator==(const OrdSmall& a, const OrdSmall& b) { return (a <=> b) == 0; }

 private:
  friend OrdSmall subtract_left(const OrdSmall& b, const OrdSmall& g);
  std::vector<Term> terms_;  // exponents strictly decreasing, coefficients > 0
};

struct OrdSmall::Term {
  OrdSmall exponent;
  std::uint64_t coeff = 0;
};

// Least x with b + x = g. Throws if b > g.
OrdSmall subtract_left(const OrdSmall& b, const OrdSmall& g);

// Exponent ω·k + m of Ω.
struct Level {
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  auto operator<=>(const Level&) const = default;
};

enum class Cofinality { kZero, kOne, kOmega, kBigOmega };
std::string to_string(Cofinality c);

class OrdOmega {
 public:
  struct Term {
    Level level;
    OrdSmall coeff;
  };

  static constexpr std::uint32_t kDefaultDepth = 2;

  OrdOmega() = default;
  OrdOmega(const OrdSmall& s);  // NOLINT: coefficients embed as Ω^0 terms
  static OrdOmega nat(std::uint64_t n) { return OrdOmega(OrdSmall::nat(n)); }
  static OrdOmega big_omega_power(std::uint32_t n, const OrdSmall& coeff = OrdSmall::nat(1));
  // Ω^ω · a.
  static OrdOmega omega_shift(const OrdOmega& a);
  // Terms must be strictly decreasing with nonzero coefficients.
  static OrdOmega from_terms(std::vector<Term> terms);
  static OrdOmega parse(std::string_view text, std::uint32_t max_depth = kDefaultDepth);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const;
  // Largest k over all terms; 0 when α < Ω^ω.
  std::uint32_t depth() const;
  std::string to_string() const;

  friend OrdOmega operator+(const OrdOmega& a, const OrdOmega& b);
  friend std::strong_ordering operator<=>(const OrdOmega& a, const OrdOmega& b);
  friend bool operator==(const OrdOmega& a, const OrdOmega& b) { return (a <=> b) == 0; }

 private:
  std::vector<Term> terms_;
};

OrdOmega subtract_left(const OrdOmega& b, const OrdOmega& g);

OrdSmall coeff(const OrdOmega& a, std::uint32_t n);    // α_[n]
OrdOmega tail(const OrdOmega& a, std::uint32_t n);     // α[n], the part above level n
OrdOmega omega_part(const OrdOmega& a);                // α_ω

Cofinality cf(const OrdSmall& a);
Cofinality cf(const OrdOmega& a);

// α^[n] = 1 + cf(α[n]) when that is below Ω, else 0. Values: 0, 1, 2 or ω.
OrdSmall upper(const OrdOmega& a, std::uint32_t n);

bool sim_k(const OrdOmega& a, const OrdOmega& b, std::uint32_t k);
// ∼_k for every k: equal finite parts and equal uppers at every level.
bool sim_all(const OrdOmega& a, const OrdOmega& b);

// The representative below Ω^(k+2) of the ∼_k class of α.
OrdOmega canonical_k(const OrdOmega& a, std::uint32_t k);

// Which rule fixes the level-(k+1) coefficient of canonical_k: 0 when
// α < Ω^(k+1), 1 for a nonzero coefficient above k, 2 when α_ω is a successor,
// 3 when cf(α_ω) = ω, 4 when cf(α_ω) = Ω.
int canonical_clause(const OrdOmega& a, std::uint32_t k);

// Order type of {b ≤ a : every g in A below a is below b}.
OrdOmega gamma(const OrdOmega& a, const std::vector<OrdOmega>& set);

struct MapEntry {
  OrdOmega from;
  OrdOmega to;
};

// Given α ∼_(k+1) β and a finite A ⊆ α, an order-preserving F: A → β with
// γ(a, A) ∼_k γ(F(a), F(A)) for every a in A ∪ {α}, where F(α) = β.
// Entries are sorted by `from`. The post-conditions are checked before returning.
std::vector<MapEntry> build_map(const OrdOmega& alpha, const OrdOmega& beta, std::vector<OrdOmega> set,
                                std::uint32_t k);

// Random generation for the law checks. Everything stays below Ω^(ω·3).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }  // uniform-ish in [0, n)
  OrdSmall small(int depth = 2);
  OrdOmega ordinal();
  OrdOmega ordinal_at_least(std::uint32_t level);  // some α ≥ Ω^level
  OrdSmall small_below(const OrdSmall& a);
  OrdOmega below(const OrdOmega& a);
  // A β with β ∼_k α, mostly different from α.
  OrdOmega sim_mutant(const OrdOmega& a, std::uint32_t k);

 private:
  std::mt19937_64 rng_;
};

// Randomized checks of the ~_k laws (canonical forms, absorption, sums, maps)
// over `instances` cases each.
Report check_canonical_law(std::uint64_t seed, std::size_t instances);
Report check_absorption_law(std::uint64_t seed, std::size_t instances);
Report property_sum_congruence(std::uint64_t seed, std::size_t instances);
Report check_map_law(std::uint64_t seed, std::size_t instances);

}  // namespace symq::ord
