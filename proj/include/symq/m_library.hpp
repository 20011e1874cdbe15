#pragma once

// Census-language formulas for encoding sets and relations of orbit types.
//
// In the finite model no count is small, so the tests "h(t) = kappa" that
// mark membership become "h(t) != 0", and "differs by fewer than kappa"
// becomes pointwise comparison of counts.

#include <string>
#include <string_view>
#include <vector>

#include "symq/m_formula.hpp"

namespace symq::logic::mlib {

MFormula almost_zero(const std::string& k);                // k in F2: every count is 0
MFormula cf_le_continuum();                                // two distinct F2 censuses with equal counts
MFormula mem(std::uint32_t n, const std::string& t, const std::string& h);
MFormula equal_sets(std::uint32_t n, const std::string& h1, const std::string& h2);
MFormula restr(std::uint32_t n, const std::string& h1, const std::string& h2);  // h1 <= h2 pointwise
MFormula min_encoding(std::uint32_t n, const std::string& h);
MFormula at_most_two_values(const std::string& k);         // k in F2
// t in IS2 whose two generators commute.
MFormula commuting_type(const std::string& t);
// t in IS2 is a product of t1, t2 in IS1: its coordinates commute and every
// orbit of coordinate 0 (resp. 1) has type t1 (resp. t2).
MFormula is_product_type(const std::string& t, const std::string& t1, const std::string& t2);

struct Entry {
  MFormula formula;
  SortEnv free;
};

std::vector<std::string> names();
// Default variable names: h, h2, k, t, t1, t2 as the constructor needs.
Entry build(std::string_view name, std::uint32_t n = 2);

}  // namespace symq::logic::mlib
