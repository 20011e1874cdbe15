#include "symq/alt5.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "symq/parallel.hpp"

namespace symq::alt5 {

using perm::Permutation;
using perm::PermTuple;
using perm::Point;

namespace {

std::string join(const std::set<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

std::vector<Permutation> permutations_of_5(bool even_only) {
  std::vector<Point> img{0, 1, 2, 3, 4};
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    std::size_t transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += c.size() - 1;
    if (!even_only || transpositions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- GroupTable

GroupTable::GroupTable(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0 || !elements_[0].is_identity()) throw Error("group table must start with the identity");
  if (n > 65535) throw Error("group too large for a table");
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<Elem>(i));
  if (index_.size() != n) throw Error("duplicate group elements");
  product_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index_.find(elements_[i] * elements_[j]);
      if (it == index_.end()) throw Error("element list is not closed under products");
      product_[i * n + j] = it->second;
      if (it->second == 0) inverse_[i] = static_cast<Elem>(j);
    }
  }
}

GroupTable GroupTable::direct_square(const GroupTable& g) {
  const std::size_t n = g.order();
  const std::size_t deg = g.element(0).ground_size();
  GroupTable sq;
  sq.elements_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Point> img(2 * deg);
      for (std::size_t x = 0; x < deg; ++x) {
        img[x] = g.element(static_cast<Elem>(i))(static_cast<Point>(x));
        img[deg + x] = static_cast<Point>(deg) + g.element(static_cast<Elem>(j))(static_cast<Point>(x));
      }
      sq.elements_.emplace_back(std::move(img));
    }
  const std::size_t m = n * n;
  sq.product_.resize(m * m);
  sq.inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t ai = a / n, aj = a % n;
    sq.inverse_[a] = static_cast<Elem>(g.inv(static_cast<Elem>(ai)) * n + g.inv(static_cast<Elem>(aj)));
    for (std::size_t b = 0; b < m; ++b)
      sq.product_[a * m + b] = static_cast<Elem>(g.mul(static_cast<Elem>(ai), static_cast<Elem>(b / n)) * n +
                                                 g.mul(static_cast<Elem>(aj), static_cast<Elem>(b % n)));
  }
  for (std::size_t a = 0; a < m; ++a) sq.index_.emplace(sq.elements_[a], static_cast<Elem>(a));
  return sq;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::optional<Elem> GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GroupTable& a5_table() {
  static const GroupTable t(permutations_of_5(true));
  return t;
}

const GroupTable& s5_table() {
  static const GroupTable t(permutations_of_5(false));
  return t;
}

const std::vector<Elem>& a5_in_s5() {
  static const std::vector<Elem> emb = [] {
    std::vector<Elem> out;
    for (const auto& p : a5_table().elements()) out.push_back(*s5_table().index_of(p));
    return out;
  }();
  return emb;
}

// ----------------------------------------------------------------- Subgroups

bool Subgroup::contains(Elem a) const { return std::binary_search(members.begin(), members.end(), a); }

Subgroup closure(const GroupTable& g, const std::vector<Elem>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> list{0};
  in[0] = 1;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (Elem s : generators) {
      Elem p = g.mul(list[head], s);
      if (!in[p]) {
        in[p] = 1;
        list.push_back(p);
      }
    }
  std::sort(list.begin(), list.end());
  return Subgroup{std::move(list)};
}

Subgroup conjugate(const GroupTable& g, const Subgroup& h, Elem a) {
  Subgroup out;
  for (Elem x : h.members) out.members.push_back(g.conj(x, a));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::size_t intersection_size(const Subgroup& h, const Subgroup& k) {
  std::size_t n = 0;
  auto i = h.members.begin(), j = k.members.begin();
  while (i != h.members.end() && j != k.members.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& g, std::size_t order_divides,
                                          const std::vector<Elem>& candidates) {
  struct Node {
    std::vector<Elem> members;
    std::vector<Elem> gens;
  };
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  std::vector<Node> found{{{0}, {}}};
  seen.insert({0});
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    auto extensions = parallel_map<std::vector<Node>>(frontier.size(), [&](std::size_t f) {
      const Node& base = found[frontier[f]];
      std::vector<Node> out;
      std::vector<char> done(g.order(), 0), in(g.order(), 0);
      for (Elem s : base.members) done[s] = 1;
      std::vector<Elem> gens = base.gens;
      gens.push_back(0);
      for (Elem z : candidates) {
        if (done[z]) continue;
        // <S, z> depends only on the double coset S z S.
        for (Elem s1 : base.members)
          for (Elem s2 : base.members) done[g.mul(g.mul(s1, z), s2)] = 1;
        gens.back() = z;
        std::vector<Elem> list{0};
        in[0] = 1;
        bool too_big = false;
        for (std::size_t head = 0; head < list.size() && !too_big; ++head)
          for (Elem s : gens) {
            Elem p = g.mul(list[head], s);
            if (!in[p]) {
              in[p] = 1;
              list.push_back(p);
              if (list.size() > order_divides) {
                too_big = true;
                break;
              }
            }
          }
        for (Elem e : list) in[e] = 0;
        if (too_big || order_divides % list.size() != 0) continue;
        std::sort(list.begin(), list.end());
        out.push_back(Node{std::move(list), gens});
      }
      return out;
    });
    std::vector<std::size_t> next;
    for (auto& batch : extensions)
      for (auto& node : batch)
        if (seen.insert(node.members).second) {
          next.push_back(found.size());
          found.push_back(std::move(node));
        }
    frontier = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) out.push_back(Subgroup{std::move(node.members)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return enumerate_subgroups(g, g.order(), all);
}

// ------------------------------------------------------------------- Actions

CosetAction coset_action(const GroupTable& g, const Subgroup& h) {
  CosetAction ca;
  ca.subgroup = h;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ca.coset_of.assign(g.order(), kUnset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (ca.coset_of[x] != kUnset) continue;
    std::vector<Elem> coset;
    for (Elem m : h.members) {
      Elem y = g.mul(m, static_cast<Elem>(x));
      ca.coset_of[y] = ca.cosets.size();
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    ca.cosets.push_back(std::move(coset));
  }
  const std::size_t d = ca.cosets.size();
  std::vector<Permutation> gens;
  gens.reserve(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    std::vector<Point> img(d);
    for (std::size_t c = 0; c < d; ++c)
      img[c] = static_cast<Point>(ca.coset_of[g.mul(ca.cosets[c][0], static_cast<Elem>(k))]);
    gens.emplace_back(std::move(img));
  }
  ca.action = PermTuple(d, std::move(gens));
  return ca;
}

std::vector<Point> diag_exceptions(const GroupTable& g, const PermTuple& t) {
  if (t.arity() != g.order()) throw Error("tuple arity must equal the group order");
  std::vector<char> bad(t.ground_size(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      const auto& k = t[g.mul(static_cast<Elem>(i), static_cast<Elem>(j))];
      for (std::size_t x = 0; x < t.ground_size(); ++x)
        if (t[j](t[i](static_cast<Point>(x))) != k(static_cast<Point>(x))) bad[x] = 1;
    }
  std::vector<Point> out;
  for (std::size_t x = 0; x < bad.size(); ++x)
    if (bad[x]) out.push_back(static_cast<Point>(x));
  return out;
}

std::vector<std::size_t> orbit_lengths(const PermTuple& t) {
  std::vector<std::size_t> out;
  for (const auto& o : perm::orbits(t)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<PermTuple, PermTuple> twisted_regular_pair(Elem s) {
  const auto& A = a5_table();
  const auto& S = s5_table();
  const auto& emb = a5_in_s5();
  if (s >= S.order()) throw Error("twist index out of range");
  std::vector<Permutation> f, g;
  for (std::size_t j = 0; j < 60; ++j) {
    Elem aj = static_cast<Elem>(j);
    Elem twisted = S.conj(emb[A.inv(aj)], s);  // s^-1 a_j^-1 s, again even
    Elem left = *A.index_of(S.element(twisted));
    std::vector<Point> fi(60), gi(60);
    for (std::size_t x = 0; x < 60; ++x) {
      fi[x] = A.mul(static_cast<Elem>(x), aj);
      gi[x] = A.mul(left, static_cast<Elem>(x));
    }
    f.emplace_back(std::move(fi));
    g.emplace_back(std::move(gi));
  }
  return {PermTuple(60, std::move(f)), PermTuple(60, std::move(g))};
}

std::pair<PermTuple, PermTuple> product_action(const Subgroup& h, const Subgroup& k) {
  const auto& A = a5_table();
  if (h.order() >= 60 || k.order() >= 60) throw Error("product action needs proper subgroups");
  auto ch = coset_action(A, h);
  auto ck = coset_action(A, k);
  const std::size_t dh = ch.degree(), dk = ck.degree();
  std::vector<Permutation> left, right;
  for (std::size_t a = 0; a < 60; ++a) {
    std::vector<Point> li(dh * dk), ri(dh * dk);
    for (std::size_t i = 0; i < dh; ++i)
      for (std::size_t j = 0; j < dk; ++j) {
        li[i * dk + j] = static_cast<Point>(ch.action[a](static_cast<Point>(i)) * dk + j);
        ri[i * dk + j] = static_cast<Point>(i * dk + ck.action[a](static_cast<Point>(j)));
      }
    left.emplace_back(std::move(li));
    right.emplace_back(std::move(ri));
  }
  return {PermTuple(dh * dk, std::move(left)), PermTuple(dh * dk, std::move(right))};
}

// -------------------------------------------------------- Exhaustive checks

Report check_lemma_3_3() {
  const auto& A = a5_table();
  Report r;
  r.name = "lemma 3.3";
  auto subs = all_subgroups(A);
  std::set<std::size_t> orders;
  for (const auto& s : subs) orders.insert(s.order());
  r.fact("subgroups", std::to_string(subs.size()));
  r.fact("subgroup_orders", join(orders));

  std::vector<const Subgroup*> proper;
  for (const auto& s : subs)
    if (s.order() < 60) proper.push_back(&s);
  r.fact("proper_subgroups", std::to_string(proper.size()));

  // Precompute every conjugate of every proper subgroup.
  std::vector<std::vector<Subgroup>> conjugates(proper.size());
  parallel_for(proper.size(), [&](std::size_t i) {
    for (std::size_t a = 0; a < 60; ++a) conjugates[i].push_back(conjugate(A, *proper[i], static_cast<Elem>(a)));
  });

  const std::size_t n = proper.size();
  std::vector<std::size_t> min_meet(n * n);
  std::vector<Elem> argmin(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t best = 61;
      Elem at = 0;
      for (std::size_t a = 0; a < 60 && best > 1; ++a) {
        std::size_t m = intersection_size(*proper[i], conjugates[j][a]);
        if (m < best) {
          best = m;
          at = static_cast<Elem>(a);
        }
      }
      min_meet[i * n + j] = best;
      argmin[i * n + j] = at;
    }
  });

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> worst;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++pairs;
      std::size_t oh = proper[i]->order(), ok = proper[j]->order(), m = min_meet[i * n + j];
      auto& w = worst[{oh, ok}];
      w = std::max(w, m);
      if (m > 3 || (m == 3 && (oh != 12 || ok != 12)))
        r.violations.push_back("H=" + std::to_string(i) + " |H|=" + std::to_string(oh) + " K=" +
                               std::to_string(j) + " |K|=" + std::to_string(ok) + " min=" + std::to_string(m) +
                               " at a=" + A.element(argmin[i * n + j]).to_string());
    }
  r.fact("pairs", std::to_string(pairs));
  for (const auto& [key, m] : worst)
    r.fact("max_min_meet[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]", std::to_string(m));

  // The classical witnesses.
  Subgroup a4;
  for (std::size_t x = 0; x < 60; ++x)
    if (A.element(static_cast<Elem>(x))(4) == 4) a4.members.push_back(static_cast<Elem>(x));
  Elem c234 = *A.index_of(Permutation::parse("(2 3 4)", 5));
  std::size_t meet = intersection_size(a4, conjugate(A, a4, c234));
  r.fact("a4_conjugator_(2 3 4)_meet", std::to_string(meet));
  if (meet > 3) r.violations.push_back("conjugator (2 3 4) gives |A4 ∩ A4^a| = " + std::to_string(meet));
  std::size_t small_ok = 0, small_total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (proper[i]->order() <= 3 || proper[j]->order() <= 3) {
        ++small_total;
        if (intersection_size(*proper[i], *proper[j]) <= 3) ++small_ok;
      }
  r.fact("small_pairs_identity_witness", std::to_string(small_ok) + "/" + std::to_string(small_total));
  if (small_ok != small_total) r.violations.push_back("a = id fails for a pair with an order <= 3 subgroup");
  r.fact("violations", std::to_string(r.violations.size()));
  return r;
}

Report check_lemma_3_4() {
  const auto& A = a5_table();
  const GroupTable sq = GroupTable::direct_square(A);
  Report r;
  r.name = "lemma 3.4";
  std::vector<Elem> candidates;
  for (std::size_t x = 0; x < sq.order(); ++x) {
    std::size_t o = sq.element_order(static_cast<Elem>(x));
    if (36 % o == 0) candidates.push_back(static_cast<Elem>(x));
  }
  r.fact("candidate_elements", std::to_string(candidates.size()));
  auto subs = enumerate_subgroups(sq, 36, candidates);
  r.fact("subgroups_order_dividing_36", std::to_string(subs.size()));

  std::vector<const Subgroup*> targets;
  std::size_t n12 = 0, n36 = 0;
  for (const auto& s : subs) {
    if (s.order() == 12) ++n12;
    if (s.order() == 36) ++n36;
    if (s.order() == 12 || s.order() == 36) targets.push_back(&s);
  }
  r.fact("order_12", std::to_string(n12));
  r.fact("order_36", std::to_string(n36));

  std::vector<char> diagonal(sq.order(), 0);
  for (std::size_t i = 0; i < 60; ++i) diagonal[i * 60 + i] = 1;
  auto witness = parallel_map<long>(targets.size(), [&](std::size_t t) -> long {
    for (std::size_t a = 0; a < sq.order(); ++a) {
      std::size_t meet = 0;
      for (Elem x : targets[t]->members) meet += diagonal[sq.conj(x, static_cast<Elem>(a))];
      if (meet != 3) return static_cast<long>(a);
    }
    return -1;
  });
  std::size_t identity_suffices = 0;
  long last_needed = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (witness[t] < 0) {
      std::string gens;
      for (Elem x : targets[t]->members) gens += " " + sq.element(x).to_string();
      r.violations.push_back("|H|=" + std::to_string(targets[t]->order()) + " members:" + gens);
      continue;
    }
    if (witness[t] == 0) ++identity_suffices;
    last_needed = std::max(last_needed, witness[t]);
  }
  r.fact("identity_witness", std::to_string(identity_suffices) + "/" + std::to_string(targets.size()));
  r.fact("largest_witness_index", std::to_string(last_needed));
  r.fact("violations", std::to_string(r.violations.size()));
  return r;
}

Report check_lemma_3_5() {
  const auto& A = a5_table();
  const auto& S = s5_table();
  const auto& emb = a5_in_s5();
  Report r;
  r.name = "lemma 3.5";
  r.notes.push_back(
      "scope: twisted regular pairs over all of S(5) and product actions on [A5:H] x [A5:K] for all proper H, K; "
      "arbitrary commuting transitive pairs are not enumerated");

  auto centralizer_in_a5 = [&](Elem y) {
    std::size_t c = 0;
    for (Elem a : emb) c += S.mul(a, y) == S.mul(y, a);
    return c;
  };
  std::set<std::size_t> cent_orders, even_lengths, odd_lengths;
  std::size_t twists = 0;
  std::vector<std::string> twist_failures;
  for (std::size_t s = 0; s < S.order(); ++s) {
    auto [f, g] = twisted_regular_pair(static_cast<Elem>(s));
    auto fail = [&](const std::string& what) {
      r.violations.push_back("twist s=" + S.element(static_cast<Elem>(s)).to_string() + ": " + what);
    };
    bool commute = true;
    for (std::size_t i = 0; i < 60 && commute; ++i)
      for (std::size_t j = 0; j < 60 && commute; ++j) commute = f[i] * g[j] == g[j] * f[i];
    if (!commute) fail("f and g do not commute");
    if (!diag_exceptions(A, f).empty() || !diag_exceptions(A, g).empty()) fail("not an A(5) action");
    PermTuple fg = pointwise_product(f, g);
    auto orbs = perm::orbits(fg);
    std::vector<std::size_t> len_of(60);
    for (const auto& o : orbs)
      for (Point p : o) len_of[p] = o.size();
    for (std::size_t i = 0; i < 60; ++i) {
      std::size_t c = centralizer_in_a5(S.mul(static_cast<Elem>(s), emb[i]));
      cent_orders.insert(c);
      if (len_of[i] * c != 60) fail("orbit of a_" + std::to_string(i) + " has length " + std::to_string(len_of[i]));
    }
    auto lengths = orbit_lengths(fg);
    std::size_t transpositions = 0;
    for (const auto& c : S.element(static_cast<Elem>(s)).cycles()) transpositions += c.size() - 1;
    auto& bucket = transpositions % 2 == 0 ? even_lengths : odd_lengths;
    bucket.insert(lengths.begin(), lengths.end());
    if (lengths.back() < 20) fail("no orbit of length >= 20");
    if (std::count(lengths.begin(), lengths.end(), 20) &&
        std::none_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l > 1 && l != 20; }))
      fail("only orbits of length 20 and 1");
    ++twists;
  }
  r.fact("twists", std::to_string(twists));
  r.fact("even_twist_orbit_lengths", join(even_lengths));
  r.fact("odd_twist_orbit_lengths", join(odd_lengths));
  r.fact("centralizer_orders", join(cent_orders));
  std::size_t c0123 = centralizer_in_a5(*S.index_of(Permutation::parse("(0 1 2 3)", 5)));
  r.fact("centralizer_(0 1 2 3)", std::to_string(c0123));
  for (const char* y : {"(0 1 2)", "(0 1 2 3 4)"})
    r.fact(std::string("centralizer_") + y, std::to_string(centralizer_in_a5(*S.index_of(Permutation::parse(y, 5)))));
  if (!even_lengths.count(20) || !even_lengths.count(12)) r.violations.push_back("even twists miss length 20 or 12");
  if (!odd_lengths.count(30)) r.violations.push_back("odd twists miss length 30");
  if (c0123 != 2) r.violations.push_back("|C((0 1 2 3))| != 2");

  auto subs = all_subgroups(A);
  std::vector<const Subgroup*> proper;
  for (const auto& s : subs)
    if (s.order() < 60) proper.push_back(&s);
  const std::size_t n = proper.size();
  struct PairResult {
    bool transitive = false;
    std::vector<std::size_t> lengths;
  };
  auto results = parallel_map<PairResult>(n * n, [&](std::size_t idx) {
    const Subgroup& h = *proper[idx / n];
    const Subgroup& k = *proper[idx % n];
    auto [g, hh] = product_action(h, k);
    std::vector<Permutation> joint(g.entries());
    joint.insert(joint.end(), hh.entries().begin(), hh.entries().end());
    PairResult pr;
    pr.transitive = perm::orbits(PermTuple(g.ground_size(), std::move(joint))).size() == 1;
    pr.lengths = orbit_lengths(pointwise_product(g, hh));
    return pr;
  });
  std::size_t transitive = 0, deg30 = 0, deg60 = 0;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const Subgroup& h = *proper[idx / n];
    const Subgroup& k = *proper[idx % n];
    const auto& pr = results[idx];
    if (!pr.transitive) continue;
    ++transitive;
    const auto& ls = pr.lengths;
    auto fail = [&](const std::string& what) {
      r.violations.push_back("product H#" + std::to_string(idx / n) + " K#" + std::to_string(idx % n) + " (|H|=" +
                             std::to_string(h.order()) + ", |K|=" + std::to_string(k.order()) + "): " + what +
                             " lengths=" + join(ls));
    };
    if (ls.back() < 20) fail("no orbit of length >= 20");
    if (std::count(ls.begin(), ls.end(), 20) &&
        std::none_of(ls.begin(), ls.end(), [](std::size_t l) { return l > 1 && l != 20; }))
      fail("only orbits of length 20 and 1");
    if (h.order() == 12 && k.order() == 10) {
      if (intersection_size(h, k) == 2 && ls.size() == 1 && ls[0] == 30) ++deg30;
    }
    if (h.order() == 12 && k.order() == 5 && ls.size() == 1 && ls[0] == 60) ++deg60;
  }
  r.fact("product_pairs", std::to_string(n * n));
  r.fact("transitive_product_pairs", std::to_string(transitive));
  r.fact("degree_30_pairs", std::to_string(deg30));
  r.fact("degree_60_pairs", std::to_string(deg60));
  if (deg30 == 0) r.violations.push_back("no degree-30 product with |H|=12, |K|=10");
  if (deg60 == 0) r.violations.push_back("no degree-60 product with |H|=12, |K|=5");
  r.fact("violations", std::to_string(r.violations.size()));
  return r;
}

// ------------------------------------------------------------ Decompositions

namespace {

std::pair<PermTuple, PermTuple> decompose(const PermTuple& t, std::size_t degree, std::size_t k_order) {
  const auto& A = a5_table();
  if (t.arity() != 60) throw Error("decomposition needs an arity-60 tuple");
  auto bad = diag_exceptions(A, t);
  if (!bad.empty()) throw Error("tuple is not an A(5) action at point " + std::to_string(bad[0]));
  const std::size_t n = t.ground_size();
  std::vector<std::vector<Point>> gi(60), hi(60);
  for (std::size_t a = 0; a < 60; ++a) {
    gi[a].resize(n);
    hi[a].resize(n);
    std::iota(gi[a].begin(), gi[a].end(), Point{0});
    std::iota(hi[a].begin(), hi[a].end(), Point{0});
  }
  const auto subs = all_subgroups(A);
  for (const auto& orbit : perm::orbits(t)) {
    if (orbit.size() == 1) continue;
    if (orbit.size() != degree)
      throw Error("orbit of size " + std::to_string(orbit.size()) + " where degree " + std::to_string(degree) +
                  " was required");
    const Point y0 = orbit[0];
    Subgroup stab;
    for (std::size_t a = 0; a < 60; ++a)
      if (t[a](y0) == y0) stab.members.push_back(static_cast<Elem>(a));
    const Subgroup* hp = nullptr;
    const Subgroup* kp = nullptr;
    for (const auto& h : subs) {
      if (h.order() != 12 || intersection_size(h, stab) != stab.order()) continue;
      for (const auto& k : subs)
        if (k.order() == k_order && intersection_size(h, k) == stab.order() &&
            intersection_size(k, stab) == stab.order()) {
          hp = &h;
          kp = &k;
          break;
        }
      if (hp) break;
    }
    if (!hp) throw Error("no subgroup pair meets in the point stabilizer");
    auto ch = coset_action(A, *hp);
    auto ck = coset_action(A, *kp);
    const std::size_t dk = ck.degree();
    // y0 t_a corresponds to (H a, K a).
    std::vector<Point> point_of(ch.degree() * dk, 0);
    std::vector<std::size_t> cell_of(n, 0);
    for (std::size_t a = 0; a < 60; ++a) {
      Point y = t[a](y0);
      std::size_t cell = ch.coset_of[a] * dk + ck.coset_of[a];
      point_of[cell] = y;
      cell_of[y] = cell;
    }
    for (std::size_t a = 0; a < 60; ++a)
      for (Point y : orbit) {
        std::size_t i = cell_of[y] / dk, j = cell_of[y] % dk;
        gi[a][y] = point_of[ch.action[a](static_cast<Point>(i)) * dk + j];
        hi[a][y] = point_of[i * dk + ck.action[a](static_cast<Point>(j))];
      }
  }
  std::vector<Permutation> gs, hs;
  for (std::size_t a = 0; a < 60; ++a) {
    gs.emplace_back(std::move(gi[a]));
    hs.emplace_back(std::move(hi[a]));
  }
  PermTuple g(n, std::move(gs)), h(n, std::move(hs));
  if (pointwise_product(g, h) != t) throw Error("internal error: factors do not recompose");
  return {std::move(g), std::move(h)};
}

}  // namespace

std::pair<PermTuple, PermTuple> decompose_30(const PermTuple& t) { return decompose(t, 30, 10); }
std::pair<PermTuple, PermTuple> decompose_60(const PermTuple& t) { return decompose(t, 60, 5); }

}  // namespace symq::alt5
