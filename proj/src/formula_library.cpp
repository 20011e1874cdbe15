#include "symq/formula_library.hpp"

#include <algorithm>
#include <functional>

namespace symq::logic {

namespace {

using F = GroupFormula;

Vars seq(Var from, std::size_t n) {
  Vars v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = from + static_cast<Var>(i);
  return v;
}

Vars concat(Vars a, const Vars& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vars slice(const Vars& v, std::size_t from, std::size_t n) {
  return Vars(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + n));
}

Var n_of(const Vars& v) { return static_cast<Var>(v.size()); }

// Index in the A(5) listing of the first element of order 2.
std::size_t involution_index() {
  const auto& g = alt5::a5_table();
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order(static_cast<alt5::Elem>(i)) == 2) return i;
  throw Error("A(5) has no involution");
}

}  // namespace

template <class Fn>
GroupFormula FormulaLibrary::memo(const char* name, Vars args, Var base, Fn&& build) {
  Key key{name, std::move(args), base};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  F f = build();
  memo_.emplace(std::move(key), f);
  return f;
}

GroupFormula FormulaLibrary::diag(const alt5::GroupTable& g, const Vars& x) {
  if (x.size() != g.order()) throw Error("diag needs one variable per group element");
  std::vector<F> cs;
  cs.reserve(g.order() * g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      cs.push_back(F::mul(x[i], x[j], x[g.mul(static_cast<alt5::Elem>(i), static_cast<alt5::Elem>(j))]));
  return F::all(std::move(cs));
}

GroupFormula FormulaLibrary::alt5(const Vars& x) {
  return memo("alt5", x, 0, [&] { return diag(alt5::a5_table(), x); });
}

GroupFormula FormulaLibrary::set(Var x, Var base) {
  Var fresh = base;
  return product_equation({x, x}, {}, fresh);
}

GroupFormula FormulaLibrary::product_is(Var x, const Vars& factors, Var base) {
  Var fresh = base;
  return product_equation(factors, {x}, fresh);
}

GroupFormula FormulaLibrary::pointwise(const Vars& x, const Vars& y, const Vars& z) {
  std::vector<F> cs;
  for (std::size_t i = 0; i < x.size(); ++i) cs.push_back(F::mul(y[i], z[i], x[i]));
  return F::all(std::move(cs));
}

GroupFormula FormulaLibrary::comm(const Vars& x, const Vars& y, Var base) {
  return memo("comm", concat(x, y), base, [&] {
    std::vector<F> cs;
    for (Var a : x)
      for (Var b : y) {
        Var fresh = base;
        cs.push_back(product_equation({a, b}, {b, a}, fresh));
      }
    return F::all(std::move(cs));
  });
}

GroupFormula FormulaLibrary::conj(const Vars& x, const Vars& y, Var base) {
  return memo("conj", concat(x, y), base, [&] {
    const Var z = base;
    std::vector<F> cs;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Var fresh = base + 1;
      cs.push_back(product_equation({x[i], z}, {z, y[i]}, fresh));
    }
    return F::exists(z, F::all(std::move(cs)));
  });
}

GroupFormula FormulaLibrary::indec(const Vars& x, Var base) {
  return memo("indec", x, base, [&] {
    const auto n = x.size();
    const Vars y = seq(base, n), z = seq(base + n_of(x), n);
    const Var inner = base + 2 * n_of(x);
    F split = F::all({comm(y, z, inner), alt5(y), alt5(z), pointwise(x, y, z)});
    F conj_either = F::any({conj(x, y, inner), conj(x, z, inner)});
    return F::all({alt5(x), F::forall(concat(y, z), F::implies(split, conj_either))});
  });
}

GroupFormula FormulaLibrary::disj1(const Vars& x, const Vars& y, Var base) {
  return memo("disj1", concat(x, y), base, [&] {
    const Vars w = seq(base, x.size());
    F product = F::exists(w, F::all({pointwise(w, x, y), indec(w, base + n_of(x))}));
    return F::all({indec(x, base), indec(y, base), comm(x, y, base), product});
  });
}

GroupFormula FormulaLibrary::disj_prime(Var x, Var y, Var base) {
  return memo("disj_prime", {x, y}, base, [&] {
    static const std::size_t i = involution_index();
    const Vars z = seq(base, 60), t = seq(base + 60, 60);
    F witness = F::exists(concat(z, t), F::all({F::eq(z[i], x), F::eq(t[i], y), disj1(z, t, base + 120)}));
    return F::all({set(x, base), set(y, base), witness});
  });
}

GroupFormula FormulaLibrary::disj(Var x, Var y, Var base) {
  return memo("disj", {x, y}, base, [&] {
    const Vars xs = seq(base, 4), ys = seq(base + 4, 4);
    const Var inner = base + 8;
    std::vector<F> cs{product_is(x, xs, inner), product_is(y, ys, inner)};
    for (Var a : xs)
      for (Var b : ys) cs.push_back(disj_prime(a, b, inner));
    return F::exists(concat(xs, ys), F::all(std::move(cs)));
  });
}

GroupFormula FormulaLibrary::subset(Var x, Var y, Var base) {
  return memo("subset", {x, y}, base, [&] {
    const Var z = base;
    return F::all({set(x, base), set(y, base),
                   F::forall(z, F::implies(disj(y, z, base + 1), disj(x, z, base + 1)))});
  });
}

GroupFormula FormulaLibrary::sameset(Var x, Var y, Var base) {
  return memo("sameset", {x, y}, base, [&] {
    const Var z = base;
    return F::all({set(x, base), set(y, base), F::forall(z, F::iff(disj(y, z, base + 1), disj(x, z, base + 1)))});
  });
}

GroupFormula FormulaLibrary::set_union(Var x, Var y, Var z, Var base) {
  const Var t = base, in = base + 1;
  return F::all({set(x, base), set(y, base), set(z, base),
                 F::forall(t, F::iff(F::all({subset(x, t, in), subset(y, t, in)}), subset(z, t, in)))});
}

GroupFormula FormulaLibrary::set_intersect(Var x, Var y, Var z, Var base) {
  const Var t = base, in = base + 1;
  return F::all({set(x, base), set(y, base), set(z, base),
                 F::forall(t, F::iff(F::all({subset(t, x, in), subset(t, y, in)}), subset(t, z, in)))});
}

GroupFormula FormulaLibrary::union_n(const Vars& x, Var y, Var base) {
  const Var z = base, in = base + 1;
  std::vector<F> each;
  for (Var xi : x) each.push_back(disj(z, xi, in));
  return F::forall(z, F::iff(disj(z, y, in), F::all(std::move(each))));
}

GroupFormula FormulaLibrary::map(Var x, Var y, Var z, Var base) {
  // w = z^-1 x z, written z w = x z.
  const Var w = base;
  Var fresh = base + 1;
  F def = product_equation({z, w}, {x, z}, fresh);
  return F::all({set(x, base), set(y, base), F::exists(w, F::all({def, sameset(w, y, base + 1)}))});
}

GroupFormula FormulaLibrary::max(Var base) {
  return memo("max", {}, base, [&] {
    const Var x = base, y = base + 1;
    return F::exists(x, F::forall(y, F::implies(disj(x, y, base + 2), F::is_one(y))));
  });
}

GroupFormula FormulaLibrary::disj_n(const Vars& x, const Vars& y, Var base) {
  std::vector<F> cs;
  for (Var a : x)
    for (Var b : y) cs.push_back(disj(a, b, base));
  return F::all(std::move(cs));
}

GroupFormula FormulaLibrary::restr_n(const Vars& x, const Vars& y, Var base) {
  return memo("restr", concat(x, y), base, [&] {
    const Vars z = seq(base, x.size());
    return F::exists(z, F::all({disj_n(x, z, base + n_of(x)), pointwise(y, x, z)}));
  });
}

GroupFormula FormulaLibrary::is_one_n(const Vars& x) {
  std::vector<F> cs;
  for (Var v : x) cs.push_back(F::is_one(v));
  return F::all(std::move(cs));
}

GroupFormula FormulaLibrary::compat_n(const Vars& x, const Vars& y, Var base) {
  return memo("compat", concat(x, y), base, [&] {
    const auto n = x.size();
    const Vars z = seq(base, n);
    const Var t = base + n_of(x);
    const Vars w = seq(t + 1, n);
    const Var inner = t + 1 + n_of(x);
    // w = z^t, written t w_i = z_i t.
    std::vector<F> defs;
    for (std::size_t i = 0; i < n; ++i) {
      Var fresh = inner;
      defs.push_back(product_equation({t, w[i]}, {z[i], t}, fresh));
    }
    defs.push_back(restr_n(w, y, inner));
    F conjugate_part = F::exists(w, F::all(std::move(defs)));
    return F::exists(concat(z, {t}), F::all({F::negate(is_one_n(z)), restr_n(z, x, inner), conjugate_part}));
  });
}

GroupFormula FormulaLibrary::pure_n(const Vars& x, Var base) {
  return memo("pure", x, base, [&] {
    const auto n = x.size();
    const Vars y = seq(base, n), z = seq(base + n_of(x), n);
    const Var inner = base + 2 * n_of(x);
    F hyp = F::all({F::negate(is_one_n(y)), F::negate(is_one_n(z)), restr_n(y, x, inner), restr_n(z, x, inner)});
    return F::all({F::forall(concat(y, z), F::implies(hyp, compat_n(y, z, inner))),
                   F::implies(F::negate(max(base)), F::negate(is_one_n(x)))});
  });
}

GroupFormula FormulaLibrary::iso_n(const Vars& x, const Vars& y, Var base) {
  return F::all({pure_n(x, base), pure_n(y, base),
                 F::any({compat_n(x, y, base), F::all({is_one_n(x), is_one_n(y)})})});
}

GroupFormula FormulaLibrary::samecard(Var x, Var y, Var base) {
  return memo("samecard", {x, y}, base, [&] {
    const Var x1 = base, x2 = base + 1, y1 = base + 2, y2 = base + 3, in = base + 4;
    F body = F::all({disj(x1, x2, in), disj(y1, y2, in), product_is(x, {x1, x2}, in), product_is(y, {y1, y2}, in),
                     conj({x1}, {y1}, in), conj({x2}, {y2}, in)});
    return F::all({set(x, base), set(y, base), F::exists({x1, x2, y1, y2}, body)});
  });
}

GroupFormula FormulaLibrary::lesseq(Var x, Var y, Var base) {
  const Var z = base;
  return F::all({set(x, base), set(y, base),
                 F::exists(z, F::all({subset(z, y, base + 1), samecard(x, z, base + 1)}))});
}

GroupFormula FormulaLibrary::eq1(Var x1, Var x2, Var base) {
  return F::all({pure_n({x1, x2}, base), F::eq(x1, x2)});
}

GroupFormula FormulaLibrary::eq(Var x1, Var x2) { return F::eq(x1, x2); }

GroupFormula FormulaLibrary::prod1(Var x1, Var x2, Var x3, Var base) {
  return F::all({pure_n({x1, x2, x3}, base), F::mul(x1, x2, x3)});
}

GroupFormula FormulaLibrary::prod(Var x1, Var x2, Var x3) { return F::mul(x1, x2, x3); }

GroupFormula FormulaLibrary::proj1_n(const Vars& x, const Vars& y, Var base) {
  if (x.size() != y.size() + 1) throw Error("proj1_n relates an (n+1)-tuple to an n-tuple");
  return F::all({pure_n(x, base), pure_n(y, base), iso_n(slice(x, 0, y.size()), y, base)});
}

GroupFormula FormulaLibrary::proj_n(const Vars& x, const Vars& y, Var base) {
  if (x.size() != y.size() + 1) throw Error("proj_n relates an (n+1)-tuple to an n-tuple");
  return conj(slice(x, 0, y.size()), y, base);
}

GroupFormula FormulaLibrary::app_n(const Vars& x, const Vars& y, Var z, Var base) {
  const auto n = x.size();
  const Vars t = seq(base, n), u = seq(base + n_of(x), n);
  const Var v = base + 2 * n_of(x), inner = v + 1;
  std::vector<F> same;
  for (std::size_t i = 0; i < n; ++i) same.push_back(F::eq(t[i], u[i]));
  F maximal = F::forall(u, F::implies(F::all({restr_n(t, u, inner), restr_n(u, x, inner), pure_n(u, inner)}),
                                      F::all(std::move(same))));
  F sized = F::exists(v, F::all({union_n(t, v, inner), samecard(v, z, inner)}));
  F found = F::exists(
      t, F::all({pure_n(t, inner), compat_n(y, t, inner), restr_n(t, x, inner), maximal, sized}));
  F none = F::all({F::forall(t, F::implies(compat_n(y, t, inner), F::negate(restr_n(t, x, inner)))), F::is_one(z)});
  return F::all({pure_n(y, base), F::any({found, none})});
}

GroupFormula FormulaLibrary::kappa_is_aleph0(Var base) {
  const Var x = base, y = base + 1;
  return F::exists(x, F::forall(y, F::implies(restr_n({y}, {x}, base + 2), F::any({F::is_one(y), F::eq(y, x)}))));
}

GroupFormula FormulaLibrary::irreducible_n(const Vars& x, Var base) {
  const auto n = x.size();
  const Vars y = seq(base, n), z = seq(base + n_of(x), n);
  const Var inner = base + 2 * n_of(x);
  F split = F::all({disj_n(y, z, inner), pointwise(x, y, z)});
  return F::all({F::negate(is_one_n(x)),
                 F::forall(concat(y, z), F::implies(split, F::any({is_one_n(y), is_one_n(z)})))});
}

GroupFormula FormulaLibrary::transposition(Var base) {
  // E x (x != 1 & x*x = 1 & A y (E q (x*y = q & E w (y*w = q & E p (x*w = p & (p^2 = 1 | p^3 = 1)))))).
  // Here w = x^y and p = x x^y.
  const Var x = base, y = base + 1, q = base + 2, w = base + 3, p = base + 4, in = base + 5;
  Var f2 = in, f3 = in;
  F small_order = F::any({product_equation({p, p}, {}, f2), product_equation({p, p, p}, {}, f3)});
  F inner = F::exists(p, F::all({F::mul(x, w, p), small_order}));
  inner = F::exists(w, F::all({F::mul(y, w, q), inner}));
  inner = F::exists(q, F::all({F::mul(x, y, q), inner}));
  return F::exists(x, F::all({F::negate(F::is_one(x)), set(x, base + 1), F::forall(y, inner)}));
}

// ---------------------------------------------------------------------------

namespace {

struct Entry {
  const char* name;
  std::function<std::size_t(std::size_t)> arity;
  std::function<F(FormulaLibrary&, const Vars&, std::size_t, Var)> build;
};

const std::vector<Entry>& entries() {
  using L = FormulaLibrary;
  auto fixed = [](std::size_t k) { return [k](std::size_t) { return k; }; };
  auto times = [](std::size_t a, std::size_t b) { return [a, b](std::size_t n) { return a * n + b; }; };
  static const std::vector<Entry> table{
      {"diag", fixed(60), [](L& l, const Vars& a, std::size_t, Var) { return l.diag(alt5::a5_table(), a); }},
      {"alt5", fixed(60), [](L& l, const Vars& a, std::size_t, Var) { return l.alt5(a); }},
      {"set", fixed(1), [](L& l, const Vars& a, std::size_t, Var b) { return l.set(a[0], b); }},
      {"comm", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.comm(slice(a, 0, n), slice(a, n, n), b); }},
      {"conj", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.conj(slice(a, 0, n), slice(a, n, n), b); }},
      {"indec", fixed(60), [](L& l, const Vars& a, std::size_t, Var b) { return l.indec(a, b); }},
      {"disj1", fixed(120),
       [](L& l, const Vars& a, std::size_t, Var b) { return l.disj1(slice(a, 0, 60), slice(a, 60, 60), b); }},
      {"disj_prime", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.disj_prime(a[0], a[1], b); }},
      {"disj", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.disj(a[0], a[1], b); }},
      {"subset", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.subset(a[0], a[1], b); }},
      {"sameset", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.sameset(a[0], a[1], b); }},
      {"union", fixed(3), [](L& l, const Vars& a, std::size_t, Var b) { return l.set_union(a[0], a[1], a[2], b); }},
      {"intersect", fixed(3),
       [](L& l, const Vars& a, std::size_t, Var b) { return l.set_intersect(a[0], a[1], a[2], b); }},
      {"union_n", times(1, 1),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.union_n(slice(a, 0, n), a[n], b); }},
      {"map", fixed(3), [](L& l, const Vars& a, std::size_t, Var b) { return l.map(a[0], a[1], a[2], b); }},
      {"max", fixed(0), [](L& l, const Vars&, std::size_t, Var b) { return l.max(b); }},
      {"disj_n", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.disj_n(slice(a, 0, n), slice(a, n, n), b); }},
      {"restr_n", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.restr_n(slice(a, 0, n), slice(a, n, n), b); }},
      {"is_one_n", times(1, 0), [](L& l, const Vars& a, std::size_t, Var) { return l.is_one_n(a); }},
      {"compat_n", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.compat_n(slice(a, 0, n), slice(a, n, n), b); }},
      {"pure_n", times(1, 0), [](L& l, const Vars& a, std::size_t, Var b) { return l.pure_n(a, b); }},
      {"iso_n", times(2, 0),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.iso_n(slice(a, 0, n), slice(a, n, n), b); }},
      {"samecard", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.samecard(a[0], a[1], b); }},
      {"lesseq", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.lesseq(a[0], a[1], b); }},
      {"eq1", fixed(2), [](L& l, const Vars& a, std::size_t, Var b) { return l.eq1(a[0], a[1], b); }},
      {"eq", fixed(2), [](L& l, const Vars& a, std::size_t, Var) { return l.eq(a[0], a[1]); }},
      {"prod1", fixed(3), [](L& l, const Vars& a, std::size_t, Var b) { return l.prod1(a[0], a[1], a[2], b); }},
      {"prod", fixed(3), [](L& l, const Vars& a, std::size_t, Var) { return l.prod(a[0], a[1], a[2]); }},
      {"proj1_n", times(2, 1),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.proj1_n(slice(a, 0, n + 1), slice(a, n + 1, n), b); }},
      {"proj_n", times(2, 1),
       [](L& l, const Vars& a, std::size_t n, Var b) { return l.proj_n(slice(a, 0, n + 1), slice(a, n + 1, n), b); }},
      {"app_n", times(2, 1),
       [](L& l, const Vars& a, std::size_t n, Var b) {
         return l.app_n(slice(a, 0, n), slice(a, n, n), a[2 * n], b);
       }},
      {"kappa_is_aleph0", fixed(0), [](L& l, const Vars&, std::size_t, Var b) { return l.kappa_is_aleph0(b); }},
      {"irreducible_n", times(1, 0), [](L& l, const Vars& a, std::size_t, Var b) { return l.irreducible_n(a, b); }},
      {"transposition", fixed(0), [](L& l, const Vars&, std::size_t, Var b) { return l.transposition(b); }},
  };
  return table;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& e : entries())
    if (name == e.name) return e;
  throw Error("unknown library formula '" + std::string(name) + "'");
}

}  // namespace

std::size_t library_arity(std::string_view name, std::size_t n) { return find_entry(name).arity(n); }

std::vector<std::string> library_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

GroupFormula formula_library(std::string_view name, const LibraryParams& params) {
  const auto& e = find_entry(name);
  if (params.n == 0) throw Error("tuple length n must be positive");
  const std::size_t k = e.arity(params.n);
  Vars args = params.args.empty() ? seq(0, k) : params.args;
  if (args.size() != k)
    throw Error(std::string(e.name) + " takes " + std::to_string(k) + " variables, got " +
                std::to_string(args.size()));
  Var base = 0;
  for (Var v : args) base = std::max(base, v + 1);
  FormulaLibrary lib;
  return e.build(lib, args, params.n, base);
}

}  // namespace symq::logic
