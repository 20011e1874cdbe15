#include "symq/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace symq::perm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    require(p < images_.size() && !seen[p], "images do not form a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (Point x : cyc) {
      require(x < n, "cycle point " + std::to_string(x) + " outside ground set of size " +
                         std::to_string(n));
      require(!used[x], "cycles are not disjoint at point " + std::to_string(x));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) p.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t ground_size) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = skip_space(text, 0);
  require(i < text.size(), "empty permutation text (use \"()\" for the identity)");
  while (i < text.size()) {
    require(text[i] == '(', "expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      i = skip_space(text, i);
      require(i < text.size(), "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      require(std::isdigit(static_cast<unsigned char>(text[i])),
              "expected a point index at offset " + std::to_string(i));
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        require(v < (1ul << 31), "point index too large");
        ++i;
      }
      cyc.push_back(static_cast<Point>(v));
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    i = skip_space(text, i);
  }
  return from_cycles(ground_size, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  require(ground_size() == rhs.ground_size(), "ground size mismatch in product");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[x] = rhs.images_[images_[x]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = static_cast<Point>(x);
  return p;
}

Permutation Permutation::conjugate(const Permutation& h) const { return h.inverse() * *this * h; }

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) s.push_back(static_cast<Point>(x));
  return s;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, c.size());
  return ord;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

// ------------------------------------------------------------------ PermTuple

PermTuple::PermTuple(std::size_t ground_size, std::vector<Permutation> entries)
    : ground_size_(ground_size), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    require(e.ground_size() == ground_size_, "tuple entries must share one ground set");
}

PermTuple PermTuple::identity(std::size_t ground_size, std::size_t arity) {
  return PermTuple(ground_size, std::vector<Permutation>(arity, Permutation::identity(ground_size)));
}

PermTuple PermTuple::parse(std::string_view text, std::size_t ground_size) {
  std::vector<Permutation> entries;
  if (skip_space(text, 0) == text.size()) return PermTuple(ground_size, {});
  // Commas separate entries only at depth 0; inside a cycle they separate points.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      entries.push_back(Permutation::parse(text.substr(start, i - start), ground_size));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return PermTuple(ground_size, std::move(entries));
}

std::vector<Point> PermTuple::support() const {
  std::vector<Point> s;
  for (std::size_t x = 0; x < ground_size_; ++x)
    for (const auto& e : entries_)
      if (e(static_cast<Point>(x)) != x) {
        s.push_back(static_cast<Point>(x));
        break;
      }
  return s;
}

bool PermTuple::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_identity(); });
}

PermTuple PermTuple::conjugate(const Permutation& h) const {
  require(h.ground_size() == ground_size_, "conjugator has the wrong ground size");
  std::vector<Permutation> out;
  out.reserve(entries_.size());
  Permutation hinv = h.inverse();
  for (const auto& e : entries_) out.push_back(hinv * e * h);
  return PermTuple(ground_size_, std::move(out));
}

std::string PermTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------- orbit utilities

std::vector<std::vector<Point>> orbits(const PermTuple& t) {
  const std::size_t n = t.ground_size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : t.entries()) {
        Point q = g(orbit[head]);
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

PermTuple restrict(const PermTuple& t, const std::vector<Point>& points) {
  std::vector<bool> in(t.ground_size(), false);
  for (Point p : points) {
    require(p < t.ground_size(), "restriction point outside ground set");
    in[p] = true;
  }
  std::vector<Permutation> out;
  for (const auto& g : t.entries()) {
    std::vector<Point> img(t.ground_size());
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (in[x]) {
        require(in[g(static_cast<Point>(x))], "restriction set is not a union of orbits");
        img[x] = g(static_cast<Point>(x));
      } else {
        img[x] = static_cast<Point>(x);
      }
    }
    out.emplace_back(std::move(img));
  }
  return PermTuple(t.ground_size(), std::move(out));
}

PermTuple pointwise_product(const PermTuple& t1, const PermTuple& t2) {
  require(t1.ground_size() == t2.ground_size() && t1.arity() == t2.arity(),
          "pointwise product needs equal ground sets and arities");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < t1.arity(); ++i) out.push_back(t1[i] * t2[i]);
  return PermTuple(t1.ground_size(), std::move(out));
}

PermTuple reindex(const PermTuple& t, const CoordMap& map) {
  std::vector<Permutation> out;
  out.reserve(map.size());
  for (std::size_t src : map) {
    if (src == kIdentityCoord) {
      out.push_back(Permutation::identity(t.ground_size()));
    } else {
      require(src < t.arity(), "coordinate " + std::to_string(src) + " out of range for arity " +
                                   std::to_string(t.arity()));
      out.push_back(t[src]);
    }
  }
  return PermTuple(t.ground_size(), std::move(out));
}

// ---------------------------------------------------------------- OrbitType

PermTuple OrbitType::to_tuple() const {
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < arity; ++i) {
    std::vector<Point> img(certificate.begin() + i * degree, certificate.begin() + (i + 1) * degree);
    gens.emplace_back(std::move(img));
  }
  return PermTuple(degree, std::move(gens));
}

std::uint64_t OrbitType::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(arity);
  mix(degree);
  for (auto c : certificate) mix(c);
  return h;
}

std::string OrbitType::hash_string() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

std::pair<OrbitType, std::vector<Point>> canonical_labeling(const PermTuple& t,
                                                            const std::vector<Point>& orbit) {
  require(!orbit.empty(), "empty orbit");
  const std::size_t n = t.ground_size();
  const std::size_t m = orbit.size();
  const std::size_t arity = t.arity();
  require(m < (1u << 16), "orbit too large for a certificate");

  constexpr Point kUnset = std::numeric_limits<Point>::max();
  std::vector<Point> label(n, kUnset);
  std::vector<Point> order;
  order.reserve(m);
  std::vector<std::uint16_t> cert(arity * m), best;
  std::vector<Point> best_order;

  for (Point p : orbit) require(p < n, "orbit point outside ground set");

  for (Point base : orbit) {
    order.clear();
    order.push_back(base);
    label[base] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (const auto& g : t.entries()) {
        Point q = g(order[head]);
        if (label[q] == kUnset) {
          require(order.size() < m, "point set is not a single orbit");
          label[q] = static_cast<Point>(order.size());
          order.push_back(q);
        }
      }
    require(order.size() == m, "point set is not a single orbit");
    for (std::size_t i = 0; i < arity; ++i)
      for (std::size_t l = 0; l < m; ++l) cert[i * m + l] = static_cast<std::uint16_t>(label[t[i](order[l])]);
    if (best.empty() || cert < best) {
      best = cert;
      best_order = order;
    }
    for (Point p : order) label[p] = kUnset;
  }
  // Orbits must be closed: every point reached lies in the given set.
  std::vector<Point> sorted_orbit(orbit), sorted_reached(best_order);
  std::sort(sorted_orbit.begin(), sorted_orbit.end());
  std::sort(sorted_reached.begin(), sorted_reached.end());
  require(sorted_orbit == sorted_reached, "point set is not a single orbit");

  OrbitType type{static_cast<std::uint32_t>(arity), static_cast<std::uint32_t>(m), std::move(best)};
  return {std::move(type), std::move(best_order)};
}

OrbitType canonical_type(const PermTuple& t, const std::vector<Point>& orbit) {
  return canonical_labeling(t, orbit).first;
}

OrbitType trivial_type(std::size_t arity) {
  return OrbitType{static_cast<std::uint32_t>(arity), 1, std::vector<std::uint16_t>(arity, 0)};
}

// ------------------------------------------------------------------- Census

void Census::add(const OrbitType& type, std::size_t count) {
  require(type.arity == arity_, "census type has the wrong arity");
  require(!(convention_ == TrivialConvention::kExclude && type.is_trivial()),
          "the trivial type is excluded under this convention");
  if (count == 0) return;
  counts_[type] += count;
}

std::size_t Census::count(const OrbitType& type) const {
  auto it = counts_.find(type);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t Census::weight() const {
  std::size_t w = 0;
  for (const auto& [type, c] : counts_) w += type.degree * c;
  return w;
}

std::string Census::to_string() const {
  std::vector<std::pair<std::string, std::size_t>> lines;
  for (const auto& [type, c] : counts_) lines.emplace_back(type.hash_string(), c);
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& [h, c] : lines) os << h << ": " << c << '\n';
  if (arity_ == 1) {
    // For one generator the type is determined by the cycle length.
    std::vector<std::pair<std::uint32_t, std::size_t>> cyc;
    for (const auto& [type, c] : counts_) cyc.emplace_back(type.degree, c);
    std::sort(cyc.rbegin(), cyc.rend());
    os << "cycles:";
    for (const auto& [len, c] : cyc) os << ' ' << len << '^' << c;
    os << '\n';
  }
  return os.str();
}

Census census(const PermTuple& t, TrivialConvention convention) {
  Census c(t.arity(), convention);
  for (const auto& orbit : orbits(t)) {
    OrbitType type = canonical_type(t, orbit);
    if (convention == TrivialConvention::kExclude && type.is_trivial()) continue;
    c.add(type);
  }
  return c;
}

std::optional<Permutation> tuples_conjugate(const PermTuple& t1, const PermTuple& t2) {
  require(t1.ground_size() == t2.ground_size() && t1.arity() == t2.arity(),
          "conjugacy test needs equal ground sets and arities");
  auto labelled = [](const PermTuple& t) {
    std::map<OrbitType, std::vector<std::vector<Point>>> by_type;
    for (const auto& orbit : orbits(t)) {
      auto [type, lab] = canonical_labeling(t, orbit);
      by_type[std::move(type)].push_back(std::move(lab));
    }
    return by_type;
  };
  auto a = labelled(t1), b = labelled(t2);
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Point> img(t1.ground_size());
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return std::nullopt;
    for (std::size_t k = 0; k < ia->second.size(); ++k)
      for (std::size_t l = 0; l < ia->second[k].size(); ++l) img[ia->second[k][l]] = ib->second[k][l];
  }
  Permutation h(std::move(img));
  require(t1.conjugate(h) == t2, "internal error: conjugator failed verification");
  return h;
}

PermTuple realize(const Census& c, std::size_t ground_size) {
  const std::size_t w = c.weight();
  require(w <= ground_size, "census weight " + std::to_string(w) + " exceeds ground size " +
                                std::to_string(ground_size));
  require(c.convention() == TrivialConvention::kExclude || w == ground_size,
          "census weight must equal the ground size when trivial orbits are counted");
  std::vector<std::vector<Point>> img(c.arity(), std::vector<Point>(ground_size));
  for (auto& v : img) std::iota(v.begin(), v.end(), Point{0});
  Point offset = 0;
  for (const auto& [type, count] : c.counts())
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t i = 0; i < c.arity(); ++i)
        for (std::size_t l = 0; l < type.degree; ++l)
          img[i][offset + l] = offset + type.certificate[i * type.degree + l];
      offset += type.degree;
    }
  std::vector<Permutation> gens;
  for (auto& v : img) gens.emplace_back(std::move(v));
  return PermTuple(ground_size, std::move(gens));
}

Census census_reindex(const Census& c, const CoordMap& map) {
  for (std::size_t src : map)
    require(src == kIdentityCoord || src < c.arity(),
            "coordinate " + std::to_string(src) + " out of range for arity " + std::to_string(c.arity()));
  Census out(map.size(), c.convention());
  for (const auto& [type, count] : c.counts()) {
    Census sub = census(reindex(type.to_tuple(), map), c.convention());
    for (const auto& [t, k] : sub.counts()) out.add(t, k * count);
  }
  return out;
}

}  // namespace symq::perm
