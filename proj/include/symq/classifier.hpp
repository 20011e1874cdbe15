#pragma once

// Invariants of S_λ(μ)/S_κ(μ) computed from symbolic cardinals κ = ℵ_β,
// λ = ℵ_γ, μ and an assumed continuum 2^ℵ0 = ℵ_θ.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symq/ordinal.hpp"

namespace symq::classify {

using ord::OrdOmega;
using ord::OrdSmall;

struct CardinalExpr {
  enum class Form { kAleph, kSuccessorOfMu };
  Form form = Form::kAleph;
  OrdOmega index;  // meaningful for kAleph

  static CardinalExpr aleph(OrdOmega index) { return {Form::kAleph, std::move(index)}; }
  static CardinalExpr successor_of_mu() { return {Form::kSuccessorOfMu, {}}; }
  // "aleph(<ordinal>)", "aleph_<n>" or "mu+".
  static CardinalExpr parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const CardinalExpr&) const = default;
};

struct ContinuumSpec {
  OrdOmega theta;  // 2^ℵ0 = ℵ_θ
};

struct QuotientSpec {
  CardinalExpr kappa, lambda, mu;
  ContinuumSpec continuum;

  // "κ, λ, μ" as three comma-separated cardinals.
  static QuotientSpec parse(std::string_view text, const OrdOmega& theta);
  std::string to_string() const;
};

// Throws unless θ is a successor below Ω (cf(2^ℵ0) > ω rules out the
// countable limits), κ and μ are alephs, and κ < λ ≤ μ⁺.
void validate(const QuotientSpec& spec);

// Index of λ with μ⁺ resolved.
OrdOmega lambda_index(const QuotientSpec& spec);

// cf(ℵ_β) as an aleph: ℵ0 for β = 0 or cf(β) = ω, ℵ_β for successor β, and
// ℵ_(θ+1) = Ω for cf(β) = Ω.
CardinalExpr cf_cardinal(const CardinalExpr& c, const ContinuumSpec& continuum);

enum class KappaCase { kA, kB, kC, kD };
std::string to_string(KappaCase c);

struct CaseTag {
  bool max_case = false;  // λ = μ⁺
  KappaCase kappa_case = KappaCase::kD;
  bool operator==(const CaseTag&) const = default;
};

CaseTag case_tag(const QuotientSpec& spec);

// β + α = γ for κ = ℵ_β, λ = ℵ_γ.
OrdOmega alpha(const QuotientSpec& spec);
// The last additively indecomposable summand of β; empty when κ = ℵ0.
std::optional<OrdOmega> alpha_star(const QuotientSpec& spec);
// Same, for a bare ordinal.
std::optional<OrdOmega> last_indecomposable(const OrdOmega& beta);

struct InvariantReport {
  CaseTag tag;
  std::uint32_t k = 0;
  OrdOmega beta, gamma;
  OrdOmega alpha;
  std::vector<OrdSmall> alpha_coeffs, alpha_uppers;  // levels 0..k
  std::optional<OrdOmega> alpha_star;
  std::vector<OrdSmall> alpha_star_coeffs, alpha_star_uppers;
  CardinalExpr cf_kappa;
  bool kap = false;  // κ ≤ 2^ℵ0
  bool fin = false;  // κ = ℵ0

  // Stable "key: value" lines.
  std::vector<std::pair<std::string, std::string>> lines() const;
};

InvariantReport invariants(const QuotientSpec& spec, std::uint32_t k);

struct Verdict {
  bool agree = false;
  std::string reason;  // first distinguishing invariant
};

// Agreement of case tags, ∼_k on α and (cases B to D) on α*, cf(κ) in cases
// B to D, and the kap/fin flags.
Verdict equivalent(const QuotientSpec& a, const QuotientSpec& b, std::uint32_t k);

}  // namespace symq::classify
