#include "symq/classifier.hpp"

#include <cctype>

namespace symq::classify {

using ord::Cofinality;

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

const OrdOmega kOne = OrdOmega::nat(1);

bool below_big_omega(const OrdOmega& a) { return a < OrdOmega::big_omega_power(1); }

}  // namespace

CardinalExpr CardinalExpr::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "mu+" || t == "succ(mu)") return successor_of_mu();
  if (t.rfind("aleph_", 0) == 0) return aleph(OrdOmega::parse(t.substr(6)));
  if (t.rfind("aleph(", 0) == 0 && t.size() > 7 && t.back() == ')')
    return aleph(OrdOmega::parse(std::string_view(t).substr(6, t.size() - 7)));
  throw Error("cannot read cardinal '" + t + "': expected aleph(<ordinal>), aleph_<n> or mu+");
}

std::string CardinalExpr::to_string() const {
  if (form == Form::kSuccessorOfMu) return "mu+";
  return "aleph(" + index.to_string() + ")";
}

QuotientSpec QuotientSpec::parse(std::string_view text, const OrdOmega& theta) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw Error("a spec is three comma-separated cardinals: kappa, lambda, mu");
  QuotientSpec s{CardinalExpr::parse(parts[0]), CardinalExpr::parse(parts[1]), CardinalExpr::parse(parts[2]),
                 ContinuumSpec{theta}};
  validate(s);
  return s;
}

std::string QuotientSpec::to_string() const {
  return kappa.to_string() + ", " + lambda.to_string() + ", " + mu.to_string();
}

void validate(const QuotientSpec& spec) {
  const auto& theta = spec.continuum.theta;
  if (theta.is_zero()) throw Error("the continuum index theta must be at least 1");
  if (!below_big_omega(theta)) throw Error("2^aleph0 = aleph(theta) needs theta below W");
  if (!theta.is_successor())
    throw Error("theta = " + theta.to_string() + " is a countable limit, so cf(2^aleph0) would be aleph0");
  if (spec.kappa.form != CardinalExpr::Form::kAleph || spec.mu.form != CardinalExpr::Form::kAleph)
    throw Error("kappa and mu must be given as aleph(...); only lambda may be mu+");
  const OrdOmega l = lambda_index(spec);
  if (!(spec.kappa.index < l)) throw Error("need kappa < lambda");
  if (!(l <= spec.mu.index + kOne)) throw Error("need lambda <= mu+");
}

OrdOmega lambda_index(const QuotientSpec& spec) {
  if (spec.lambda.form == CardinalExpr::Form::kSuccessorOfMu) return spec.mu.index + kOne;
  return spec.lambda.index;
}

CardinalExpr cf_cardinal(const CardinalExpr& c, const ContinuumSpec& continuum) {
  if (c.form != CardinalExpr::Form::kAleph) throw Error("resolve mu+ before taking cofinalities");
  switch (ord::cf(c.index)) {
    case Cofinality::kZero:
    case Cofinality::kOmega: return CardinalExpr::aleph({});
    case Cofinality::kOne: return c;
    case Cofinality::kBigOmega: return CardinalExpr::aleph(continuum.theta + kOne);
  }
  return c;
}

std::string to_string(KappaCase c) {
  switch (c) {
    case KappaCase::kA: return "A";
    case KappaCase::kB: return "B";
    case KappaCase::kC: return "C";
    case KappaCase::kD: return "D";
  }
  return "?";
}

CaseTag case_tag(const QuotientSpec& spec) {
  validate(spec);
  CaseTag tag;
  tag.max_case = lambda_index(spec) == spec.mu.index + kOne;
  const auto& beta = spec.kappa.index;
  const auto& theta = spec.continuum.theta;
  if (beta.is_zero()) {
    tag.kappa_case = KappaCase::kD;
  } else if (beta <= theta) {
    tag.kappa_case = KappaCase::kC;
  } else {
    // κ > 2^ℵ0; compare cf(κ) = ℵ_i with ℵ_θ.
    const auto cfk = cf_cardinal(spec.kappa, spec.continuum);
    tag.kappa_case = cfk.index > theta ? KappaCase::kA : KappaCase::kB;
  }
  return tag;
}

OrdOmega alpha(const QuotientSpec& spec) {
  validate(spec);
  return ord::subtract_left(spec.kappa.index, lambda_index(spec));
}

std::optional<OrdOmega> last_indecomposable(const OrdOmega& beta) {
  if (beta.is_zero()) return std::nullopt;
  const auto& last = beta.terms().back();
  const auto& small = last.coeff.terms().back();
  return OrdOmega::from_terms({{last.level, OrdSmall::omega_power(small.exponent)}});
}

std::optional<OrdOmega> alpha_star(const QuotientSpec& spec) {
  validate(spec);
  return last_indecomposable(spec.kappa.index);
}

InvariantReport invariants(const QuotientSpec& spec, std::uint32_t k) {
  InvariantReport r;
  r.tag = case_tag(spec);
  r.k = k;
  r.beta = spec.kappa.index;
  r.gamma = lambda_index(spec);
  r.alpha = alpha(spec);
  for (std::uint32_t l = 0; l <= k; ++l) {
    r.alpha_coeffs.push_back(ord::coeff(r.alpha, l));
    r.alpha_uppers.push_back(ord::upper(r.alpha, l));
  }
  r.alpha_star = alpha_star(spec);
  if (r.alpha_star)
    for (std::uint32_t l = 0; l <= k; ++l) {
      r.alpha_star_coeffs.push_back(ord::coeff(*r.alpha_star, l));
      r.alpha_star_uppers.push_back(ord::upper(*r.alpha_star, l));
    }
  r.cf_kappa = cf_cardinal(spec.kappa, spec.continuum);
  r.kap = r.tag.kappa_case == KappaCase::kC || r.tag.kappa_case == KappaCase::kD;
  r.fin = r.tag.kappa_case == KappaCase::kD;
  return r;
}

std::vector<std::pair<std::string, std::string>> InvariantReport::lines() const {
  static const char* const kCaseText[] = {"cf(kappa) > 2^aleph0", "cf(kappa) <= 2^aleph0 < kappa",
                                          "aleph0 < kappa <= 2^aleph0", "kappa = aleph0"};
  std::vector<std::pair<std::string, std::string>> out;
  const bool star_relevant = tag.kappa_case != KappaCase::kA;
  out.emplace_back("case", to_string(tag.kappa_case) + " (" + kCaseText[static_cast<int>(tag.kappa_case)] + ")");
  out.emplace_back("max_case", tag.max_case ? "lambda = mu+" : "lambda <= mu");
  out.emplace_back("beta", beta.to_string());
  out.emplace_back("gamma", gamma.to_string());
  out.emplace_back("alpha", alpha.to_string());
  for (std::uint32_t l = 0; l <= k; ++l) {
    out.emplace_back("alpha_[" + std::to_string(l) + "]", alpha_coeffs[l].to_string());
    out.emplace_back("alpha^[" + std::to_string(l) + "]", alpha_uppers[l].to_string());
  }
  out.emplace_back("alpha_star", alpha_star ? alpha_star->to_string() : "n/a");
  out.emplace_back("alpha_star_relevant", star_relevant ? "yes" : "no");
  for (std::uint32_t l = 0; alpha_star && l <= k; ++l) {
    out.emplace_back("alpha*_[" + std::to_string(l) + "]", alpha_star_coeffs[l].to_string());
    out.emplace_back("alpha*^[" + std::to_string(l) + "]", alpha_star_uppers[l].to_string());
  }
  out.emplace_back("cf_kappa", cf_kappa.to_string());
  out.emplace_back("cf_kappa_relevant", star_relevant ? "yes" : "no");
  out.emplace_back("kap", kap ? "present" : "absent");
  out.emplace_back("fin", fin ? "present" : "absent");
  return out;
}

Verdict equivalent(const QuotientSpec& a, const QuotientSpec& b, std::uint32_t k) {
  if (a.continuum.theta != b.continuum.theta) throw Error("the two specs assume different continuum values");
  const auto ra = invariants(a, k), rb = invariants(b, k);
  if (ra.tag.kappa_case != rb.tag.kappa_case)
    return {false, "case (" + to_string(ra.tag.kappa_case) + " vs " + to_string(rb.tag.kappa_case) + ")"};
  if (ra.tag.max_case != rb.tag.max_case) return {false, "max_case"};
  for (std::uint32_t l = 0; l <= k; ++l) {
    if (ra.alpha_coeffs[l] != rb.alpha_coeffs[l])
      return {false, "alpha_[" + std::to_string(l) + "] (" + ra.alpha_coeffs[l].to_string() + " vs " +
                         rb.alpha_coeffs[l].to_string() + ")"};
    if (ra.alpha_uppers[l] != rb.alpha_uppers[l])
      return {false, "alpha^[" + std::to_string(l) + "] (" + ra.alpha_uppers[l].to_string() + " vs " +
                         rb.alpha_uppers[l].to_string() + ")"};
  }
  if (ra.tag.kappa_case != KappaCase::kA) {
    if (ra.alpha_star.has_value() != rb.alpha_star.has_value()) return {false, "alpha_star"};
    for (std::uint32_t l = 0; ra.alpha_star && l <= k; ++l) {
      if (ra.alpha_star_coeffs[l] != rb.alpha_star_coeffs[l])
        return {false, "alpha*_[" + std::to_string(l) + "] (" + ra.alpha_star_coeffs[l].to_string() + " vs " +
                           rb.alpha_star_coeffs[l].to_string() + ")"};
      if (ra.alpha_star_uppers[l] != rb.alpha_star_uppers[l])
        return {false, "alpha*^[" + std::to_string(l) + "]"};
    }
    if (ra.cf_kappa != rb.cf_kappa)
      return {false, "cf(kappa) (" + ra.cf_kappa.to_string() + " vs " + rb.cf_kappa.to_string() + ")"};
  }
  if (ra.kap != rb.kap) return {false, "kap"};
  if (ra.fin != rb.fin) return {false, "fin"};
  return {true, ""};
}

}  // namespace symq::classify
