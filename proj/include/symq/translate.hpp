#pragma once

// Compiles a group formula phi(x_0..x_{n-1}) into a census formula psi(y0)
// with y0 of sort F_n, such that Sym(omega) satisfies phi at f exactly when
// the finite census model satisfies psi at the census of f.
//
// Coordinates of the current census variable stand for the variables in
// scope, in binding order. Atoms select their coordinates with a reindex
// (omitted when it is the identity), x_i = 1 pairs coordinate i with an
// inserted identity coordinate, E x (phi) becomes
// E y' in F_{n+1} (psi(y') & proj(y') = y), and A x (phi) becomes !E x !(phi).

#include <memory>

#include "symq/group_formula.hpp"
#include "symq/m_formula.hpp"
#include "symq/m_model.hpp"
#include "symq/report.hpp"

namespace symq::logic {

struct TranslateOptions {
  bool weighted = false;  // use the orbit-size weighted Eq and Prod
};

// Name of the census variable introduced at quantifier depth d; y0 is free.
std::string census_var(std::size_t depth);

MFormula translate(const GroupFormula& phi, std::size_t arity, const TranslateOptions& options = {});

// Census arity the finite model must provide to evaluate translate(phi, arity).
std::size_t translation_arity(const GroupFormula& phi, std::size_t arity);

// Compares eval_group with eval_m on every assignment of arity many
// permutations of the model's ground set.
Report check_translation(const GroupFormula& phi, std::size_t arity, const MFinModel& model,
                         const TranslateOptions& options = {});
// Same, with a model built to the needed arity.
Report check_translation(const GroupFormula& phi, std::size_t arity, std::size_t omega,
                         const TranslateOptions& options = {});

}  // namespace symq::logic
