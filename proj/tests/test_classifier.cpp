#include "doctest.h"
#include "symq/classifier.hpp"

using namespace symq::classify;
using symq::ord::OrdOmega;

namespace {

const OrdOmega kCH = OrdOmega::nat(1);

QuotientSpec S(std::string_view text, const OrdOmega& theta = kCH) { return QuotientSpec::parse(text, theta); }
OrdOmega O(std::string_view s) { return OrdOmega::parse(s); }

std::string field(const InvariantReport& r, const std::string& key) {
  for (const auto& [k, v] : r.lines())
    if (k == key) return v;
  return "<missing>";
}

// Random well-formed specs under θ = 1 with indices mixing finite, ω-ish and Ω-ish ordinals.
std::vector<QuotientSpec> corpus(std::uint64_t seed, std::size_t n) {
  symq::ord::Sampler s(seed);
  std::vector<QuotientSpec> out;
  while (out.size() < n) {
    OrdOmega beta = s.pick(3) == 0 ? OrdOmega::nat(s.pick(4)) : s.ordinal();
    OrdOmega alpha = s.ordinal();
    if (alpha.is_zero()) alpha = OrdOmega::nat(1 + s.pick(3));
    OrdOmega gamma = beta + alpha;
    if (gamma == beta) continue;
    QuotientSpec q{CardinalExpr::aleph(beta), CardinalExpr::aleph(gamma), CardinalExpr::aleph(gamma),
                   ContinuumSpec{kCH}};
    switch (s.pick(3)) {
      case 0: q.lambda = CardinalExpr::successor_of_mu(); break;
      case 1: q.mu = CardinalExpr::aleph(gamma + s.ordinal()); break;
      default: break;
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("cofinality of alephs") {
  const ContinuumSpec ch{kCH};
  CHECK(cf_cardinal(CardinalExpr::parse("aleph(w)"), ch) == CardinalExpr::aleph({}));
  CHECK(cf_cardinal(CardinalExpr::parse("aleph_5"), ch) == CardinalExpr::parse("aleph(5)"));
  CHECK(cf_cardinal(CardinalExpr::parse("aleph(w*2)"), ch) == CardinalExpr::aleph({}));
  CHECK(cf_cardinal(CardinalExpr::parse("aleph(0)"), ch) == CardinalExpr::aleph({}));
  CHECK(cf_cardinal(CardinalExpr::parse("aleph(W)"), ch) == CardinalExpr::parse("aleph(2)"));
  CHECK_THROWS_AS(cf_cardinal(CardinalExpr::successor_of_mu(), ch), symq::Error);
}

TEST_CASE("case tags") {
  CHECK(case_tag(S("aleph(2), aleph(5), aleph(9)")) == CaseTag{false, KappaCase::kA});
  CHECK(case_tag(S("aleph(w), aleph(w+1), aleph(w+5)")).kappa_case == KappaCase::kB);
  CHECK(case_tag(S("aleph(1), aleph(3), aleph(3)")).kappa_case == KappaCase::kC);
  CHECK(case_tag(S("aleph(0), aleph(3), aleph(3)")).kappa_case == KappaCase::kD);
  CHECK(case_tag(S("aleph(0), aleph(1), aleph(1)", O("7"))).kappa_case == KappaCase::kD);
  CHECK(case_tag(S("aleph(0), mu+, aleph(4)")).max_case);
  CHECK(case_tag(S("aleph(0), aleph(5), aleph(4)")).max_case);
  CHECK(!case_tag(S("aleph(0), aleph(4), aleph(4)")).max_case);
  // Larger continuum moves the boundary.
  CHECK(case_tag(S("aleph(2), aleph(5), aleph(9)", O("3"))).kappa_case == KappaCase::kC);
  CHECK(case_tag(S("aleph(W), aleph(W+1), aleph(W+1)")).kappa_case == KappaCase::kA);
  CHECK(case_tag(S("aleph(W*w), aleph(W*w+1), aleph(W*w+1)")).kappa_case == KappaCase::kB);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(S("aleph(3), aleph(3), aleph(5)"), symq::Error);
  CHECK_THROWS_AS(S("aleph(3), aleph(7), aleph(5)"), symq::Error);
  CHECK_THROWS_AS(S("aleph(3), aleph(4)"), symq::Error);
  CHECK_THROWS_AS(S("mu+, aleph(4), aleph(5)"), symq::Error);
  CHECK_THROWS_AS(S("aleph(1), aleph(2), aleph(3)", O("0")), symq::Error);
  CHECK_THROWS_AS(S("aleph(1), aleph(2), aleph(3)", O("w")), symq::Error);
  CHECK_THROWS_AS(S("aleph(1), aleph(2), aleph(3)", O("W")), symq::Error);
  CHECK_THROWS_AS(CardinalExpr::parse("beth(2)"), symq::Error);
  CHECK(S("aleph(w^2+w), aleph(w^2+w*2), aleph(w^3)").to_string() == "aleph(w^2+w), aleph(w^2+w*2), aleph(w^3)");
}

TEST_CASE("alpha and alpha star") {
  CHECK(alpha(S("aleph(1), aleph(2), aleph(2)")) == O("1"));
  CHECK(alpha(S("aleph(w), aleph(w*2), aleph(w*2)")) == O("w"));
  CHECK(alpha(S("aleph(2), aleph(w), aleph(w)")) == O("w"));
  CHECK(alpha(S("aleph(3), mu+, aleph(8)")) == O("6"));
  CHECK(last_indecomposable(O("w^2+w")) == O("w"));
  CHECK(last_indecomposable(O("5")) == O("1"));
  CHECK(last_indecomposable(O("W^2*(w+3) + W*w^2")) == O("W*(w^2)"));
  CHECK(!alpha_star(S("aleph(0), aleph(1), aleph(1)")).has_value());

  // Direct check over naturals: α is the difference, α* = 1.
  for (std::uint64_t b = 0; b < 6; ++b)
    for (std::uint64_t g = b + 1; g < 9; ++g) {
      QuotientSpec q{CardinalExpr::aleph(OrdOmega::nat(b)), CardinalExpr::aleph(OrdOmega::nat(g)),
                     CardinalExpr::aleph(OrdOmega::nat(g)), ContinuumSpec{kCH}};
      CHECK(alpha(q) == OrdOmega::nat(g - b));
      if (b > 0) CHECK(*alpha_star(q) == O("1"));
    }

  symq::ord::Sampler s(4);
  for (int i = 0; i < 2000; ++i) {
    auto beta = s.ordinal();
    auto star = last_indecomposable(beta);
    if (!star) continue;
    // Peel one copy of α* off the last term of β and add it back.
    auto terms = beta.terms();
    auto last = terms.back();
    terms.pop_back();
    auto prefix = OrdOmega::from_terms(terms);
    auto c = last.coeff;
    const auto& ct = c.terms();
    symq::ord::OrdSmall rest;
    for (std::size_t j = 0; j + 1 < ct.size(); ++j) rest = rest + symq::ord::OrdSmall::omega_power(ct[j].exponent, ct[j].coeff);
    rest = rest + symq::ord::OrdSmall::omega_power(ct.back().exponent, ct.back().coeff - 1);
    if (!rest.is_zero()) prefix = prefix + OrdOmega::from_terms({{last.level, rest}});
    REQUIRE(prefix + *star == beta);
    // α* absorbs everything below it from the left.
    for (int j = 0; j < 5; ++j) REQUIRE(s.below(*star) + *star == *star);
  }
}

TEST_CASE("invariant reports") {
  auto r = invariants(S("aleph(2), aleph(2+w), aleph(w*3)"), 2);
  CHECK(r.alpha == O("w"));
  CHECK(r.alpha_coeffs[0] == symq::ord::OrdSmall::omega());
  CHECK(field(r, "alpha^[0]") == "1");
  CHECK(field(r, "case").rfind("A", 0) == 0);

  auto c = invariants(S("aleph(1), aleph(4), aleph(4)"), 1);
  CHECK(c.kap);
  CHECK(!c.fin);
  CHECK(field(c, "kap") == "present");
  auto d = invariants(S("aleph(0), aleph(4), aleph(4)"), 1);
  CHECK(d.kap);
  CHECK(d.fin);
  CHECK(field(d, "alpha_star") == "n/a");

  auto big = invariants(S("aleph(3), aleph(3 + W^2*2 + W*w + 1), aleph(W^3)"), 2);
  CHECK(field(big, "alpha_[1]") == "w");
  CHECK(field(big, "alpha^[0]") == "w");
  CHECK(field(big, "alpha^[1]") == "0");
}

TEST_CASE("worked equivalence examples") {
  auto v1 = equivalent(S("aleph(5), aleph(6), aleph(9)"), S("aleph(7), aleph(8), aleph(12)"), 3);
  CHECK(v1.agree);
  auto v2 = equivalent(S("aleph(2), aleph(5), aleph(9)"), S("aleph(2), aleph(6), aleph(9)"), 3);
  CHECK(!v2.agree);
  CHECK(v2.reason.rfind("alpha_[0]", 0) == 0);
  auto v3 = equivalent(S("aleph(w), aleph(w+1), aleph(w+3)"), S("aleph(w+1), aleph(w+2), aleph(w+3)"), 3);
  CHECK(!v3.agree);
  CHECK(v3.reason.rfind("case", 0) == 0);
  CHECK_THROWS_AS(equivalent(S("aleph(5), aleph(6), aleph(9)"), S("aleph(5), aleph(6), aleph(9)", O("2")), 0),
                  symq::Error);
  // Case B compares cf(κ) and α*.
  auto v4 = equivalent(S("aleph(w), aleph(w+1), aleph(w+1)"), S("aleph(w*2), aleph(w*2+1), aleph(w*2+1)"), 2);
  CHECK(v4.agree);
  auto v5 = equivalent(S("aleph(w), aleph(w+1), aleph(w+1)"), S("aleph(w^2), aleph(w^2+1), aleph(w^2+1)"), 2);
  CHECK(!v5.agree);
  CHECK(v5.reason.rfind("alpha*_[0]", 0) == 0);
}

TEST_CASE("successor family in case A agrees at every k") {
  for (std::uint64_t b1 = 2; b1 < 12; ++b1)
    for (std::uint64_t b2 = 2; b2 < 12; ++b2)
      for (std::uint32_t k = 0; k < 6; ++k) {
        // κ, κ⁺, μ = κ on one side written out, on the other through mu+.
        QuotientSpec p{CardinalExpr::aleph(OrdOmega::nat(b1)), CardinalExpr::aleph(OrdOmega::nat(b1 + 1)),
                       CardinalExpr::aleph(OrdOmega::nat(b1)), ContinuumSpec{kCH}};
        QuotientSpec q{CardinalExpr::aleph(OrdOmega::nat(b2)), CardinalExpr::successor_of_mu(),
                       CardinalExpr::aleph(OrdOmega::nat(b2)), ContinuumSpec{kCH}};
        REQUIRE(equivalent(p, q, k).agree);
      }
}

TEST_CASE("equivalent is an equivalence relation that refines with k") {
  const auto specs = corpus(17, 60);
  for (std::uint32_t k = 0; k < 3; ++k) {
    std::vector<std::vector<bool>> eq(specs.size(), std::vector<bool>(specs.size()));
    for (std::size_t i = 0; i < specs.size(); ++i)
      for (std::size_t j = 0; j < specs.size(); ++j) eq[i][j] = equivalent(specs[i], specs[j], k).agree;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      REQUIRE(eq[i][i]);
      for (std::size_t j = 0; j < specs.size(); ++j) {
        REQUIRE(eq[i][j] == eq[j][i]);
        if (equivalent(specs[i], specs[j], k + 1).agree) REQUIRE(eq[i][j]);
        for (std::size_t l = 0; l < specs.size(); ++l)
          if (eq[i][j] && eq[j][l]) REQUIRE(eq[i][l]);
      }
    }
  }
}

TEST_CASE("mu does not affect the report when lambda <= mu") {
  symq::ord::Sampler s(8);
  for (const auto& q : corpus(23, 200)) {
    if (q.lambda.form == CardinalExpr::Form::kSuccessorOfMu) continue;
    if (!(q.lambda.index <= q.mu.index)) continue;
    auto base = invariants(q, 3).lines();
    for (int t = 0; t < 5; ++t) {
      auto p = q;
      p.mu = CardinalExpr::aleph(q.lambda.index + s.ordinal());
      REQUIRE(invariants(p, 3).lines() == base);
    }
  }
}
