#include "symq/m_library.hpp"

namespace symq::logic::mlib {

namespace {

using M = MFormula;
using T = MTerm;

M nonzero(const T& c) { return M::negate(M::equal(c, T::zero())); }

}  // namespace

MFormula almost_zero(const std::string& k) {
  return M::forall("t", Sort::is(2), M::equal(T::app(T::var(k), T::var("t")), T::zero()));
}

MFormula cf_le_continuum() {
  const auto h1 = T::var("h1"), h2 = T::var("h2");
  M same = M::forall("t", Sort::is(2), M::equal(T::app(h1, T::var("t")), T::app(h2, T::var("t"))));
  return M::exists("h1", Sort::f(2), M::exists("h2", Sort::f(2), M::all({M::negate(M::equal(h1, h2)), same})));
}

MFormula mem(std::uint32_t, const std::string& t, const std::string& h) {
  return nonzero(T::app(T::var(h), T::var(t)));
}

MFormula equal_sets(std::uint32_t n, const std::string& h1, const std::string& h2) {
  return M::forall("s", Sort::is(n), M::iff(mem(n, "s", h1), mem(n, "s", h2)));
}

MFormula restr(std::uint32_t n, const std::string& h1, const std::string& h2) {
  return M::forall("s", Sort::is(n),
                   M::negate(M::less(T::app(T::var(h2), T::var("s")), T::app(T::var(h1), T::var("s")))));
}

MFormula min_encoding(std::uint32_t n, const std::string& h) {
  return M::forall("g", Sort::f(n), M::implies(equal_sets(n, h, "g"), restr(n, h, "g")));
}

MFormula at_most_two_values(const std::string& k) {
  const auto v = T::app(T::var(k), T::var("t"));
  return M::exists("c1", Sort::card(),
                   M::exists("c2", Sort::card(),
                             M::forall("t", Sort::is(2),
                                       M::any({M::equal(v, T::var("c1")), M::equal(v, T::var("c2"))}))));
}

MFormula commuting_type(const std::string& t) {
  // A type u of (g1, g2, g1 g2, g2 g1) restricting to t, with g1 g2 = g2 g1.
  const auto u = T::var("u");
  return M::exists("u", Sort::is(4),
                   M::all({M::proj1(u, T::var(t), {0, 1}), M::prod1(u, {0, 1, 2}), M::prod1(u, {1, 0, 3}),
                           M::eq1(u, {2, 3})}));
}

MFormula is_product_type(const std::string& t, const std::string& t1, const std::string& t2) {
  const auto s = T::var("s");
  auto orbits_are = [&](std::size_t coord, const std::string& want) {
    return M::forall("s", Sort::is(1), M::implies(M::proj1(T::var(t), s, {coord}), M::equal(s, T::var(want))));
  };
  return M::all({commuting_type(t), orbits_are(0, t1), orbits_are(1, t2)});
}

std::vector<std::string> names() {
  return {"almost_zero", "cf_le_continuum", "mem", "equal_sets", "restr",
          "min",         "at_most_two_values", "commuting_type", "is_product_type"};
}

Entry build(std::string_view name, std::uint32_t n) {
  if (name == "almost_zero") return {almost_zero("k"), {{"k", Sort::f(2)}}};
  if (name == "cf_le_continuum") return {cf_le_continuum(), {}};
  if (name == "mem") return {mem(n, "t", "h"), {{"t", Sort::is(n)}, {"h", Sort::f(n)}}};
  if (name == "equal_sets") return {equal_sets(n, "h", "h2"), {{"h", Sort::f(n)}, {"h2", Sort::f(n)}}};
  if (name == "restr") return {restr(n, "h", "h2"), {{"h", Sort::f(n)}, {"h2", Sort::f(n)}}};
  if (name == "min") return {min_encoding(n, "h"), {{"h", Sort::f(n)}}};
  if (name == "at_most_two_values") return {at_most_two_values("k"), {{"k", Sort::f(2)}}};
  if (name == "commuting_type") return {commuting_type("t"), {{"t", Sort::is(2)}}};
  if (name == "is_product_type")
    return {is_product_type("t", "t1", "t2"), {{"t", Sort::is(2)}, {"t1", Sort::is(1)}, {"t2", Sort::is(1)}}};
  throw Error("unknown census formula '" + std::string(name) + "'");
}

}  // namespace symq::logic::mlib
