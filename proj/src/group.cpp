#include "eicat/group.hpp"

#include "eicat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eicat {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = order_;
  if (n == 0) throw std::invalid_argument("group of order 0");
  if (table_.size() != n * n) throw std::invalid_argument("group table has wrong size");
  for (int v : table_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, static_cast<int>(a)) != static_cast<int>(a) || mul(static_cast<int>(a), 0) != static_cast<int>(a)) {
      throw std::invalid_argument("element 0 is not the identity");
    }
  }
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) {
        if (mul(static_cast<int>(b), static_cast<int>(a)) != 0) {
          throw std::invalid_argument("one-sided inverse in group table");
        }
        inverse_[a] = static_cast<int>(b);
        break;
      }
    }
    if (inverse_[a] < 0) throw std::invalid_argument("element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = mul(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(ab, static_cast<int>(c)) != mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c)))) {
          throw std::invalid_argument("group table is not associative");
        }
      }
    }
  }
  if (!names_.empty() && names_.size() != n) throw std::invalid_argument("group names have wrong length");
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (mul(static_cast<int>(a), static_cast<int>(b)) != mul(static_cast<int>(b), static_cast<int>(a))) return false;
    }
  }
  return true;
}

FiniteGroup trivial_group() { return FiniteGroup(1, {0}, {"e"}); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<int>((a + b) % n);
  }
  return FiniteGroup(n, std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral group of degree 0");
  const std::size_t order = 2 * n;
  std::vector<int> t(order * order);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k = x % n, e = x / n;
    names.push_back(e ? "r" + std::to_string(k) + "s" : "r" + std::to_string(k));
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const long k1 = static_cast<long>(x % n), e1 = static_cast<long>(x / n);
      const long k2 = static_cast<long>(y % n), e2 = static_cast<long>(y / n);
      const long nn = static_cast<long>(n);
      const long k = ((k1 + (e1 ? -k2 : k2)) % nn + nn) % nn;
      t[x * order + y] = static_cast<int>(k + nn * (e1 ^ e2));
    }
  }
  return FiniteGroup(order, std::move(t), std::move(names));
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

bool is_even(const std::vector<int>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

FiniteGroup group_from_element_list(std::vector<std::vector<int>> elems) {
  const std::size_t degree = elems.empty() ? 0 : elems[0].size();
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  std::sort(elems.begin(), elems.end());
  auto it = std::find(elems.begin(), elems.end(), ident);
  std::rotate(elems.begin(), it, it + 1);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const std::size_t n = elems.size();
  std::vector<int> t(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::string name;
    for (int v : elems[a]) name += std::to_string(v);
    names.push_back(name);
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
  }
  return FiniteGroup(n, std::move(t), std::move(names));
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("symmetric group degree must be in 1..5");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_element_list(std::move(elems));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("alternating group degree must be in 1..5");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    if (is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_element_list(std::move(elems));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> t(n * n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("(" + g.names()[x / nh] + "," + h.names()[x % nh] + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const int a = g.mul(static_cast<int>(x / nh), static_cast<int>(y / nh));
      const int b = h.mul(static_cast<int>(x % nh), static_cast<int>(y % nh));
      t[x * n + y] = static_cast<int>(a * nh + b);
    }
  }
  return FiniteGroup(n, std::move(t), std::move(names));
}

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<std::vector<int>>& generators,
                                    std::size_t cap) {
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  for (const auto& g : generators) {
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ident) throw std::invalid_argument("generator is not a permutation of the given degree");
  }
  std::set<std::vector<int>> seen{ident};
  std::vector<std::vector<int>> frontier{ident};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        auto y = compose_perm(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw std::invalid_argument("group order exceeds cap " + std::to_string(cap));
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return group_from_element_list({seen.begin(), seen.end()});
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed group spec '" + std::string(whole) + "'");
  std::size_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed group spec '" + std::string(whole) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1000000) throw std::invalid_argument("group parameter too large");
  }
  return v;
}

FiniteGroup build_factor(std::string_view spec, std::size_t cap) {
  if (spec == "trivial") return trivial_group();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("malformed group spec '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const std::size_t n = parse_size(spec.substr(colon + 1), spec);
  auto check = [&](std::size_t order) {
    if (order > cap) throw std::invalid_argument("group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  };
  if (kind == "cyclic") {
    check(n);
    return cyclic_group(n);
  }
  if (kind == "dihedral") {
    check(2 * n);
    return dihedral_group(n);
  }
  if (kind == "sym" || kind == "alt") {
    if (n == 0 || n > 5) throw std::invalid_argument("symmetric/alternating degree must be in 1..5");
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    if (kind == "sym") {
      check(fact);
      return symmetric_group(n);
    }
    check(n >= 2 ? fact / 2 : 1);
    return alternating_group(n);
  }
  throw std::invalid_argument("unknown group kind '" + std::string(kind) + "'");
}

}  // namespace

FiniteGroup build_group(std::string_view spec, std::size_t cap) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto x = spec.find('x', start);
    if (x == std::string_view::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, x - start));
    start = x + 1;
  }
  std::size_t total = 1;
  FiniteGroup out = build_factor(parts[0], cap);
  total = out.order();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    FiniteGroup f = build_factor(parts[i], cap);
    total *= f.order();
    if (total > cap) throw std::invalid_argument("group order " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
    out = direct_product(out, f);
  }
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      const int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int e : elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.order()) return false;
    in[e] = 1;
  }
  if (!in[0]) return false;
  for (int a : elements) {
    for (int b : elements) {
      if (!in[g.mul(a, g.inv(b))]) return false;
    }
  }
  return true;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw std::invalid_argument("group order exceeds cap " + std::to_string(cap));
  std::set<Subgroup> found;
  for (std::size_t x = 0; x < g.order(); ++x) found.insert(generated_subgroup(g, {static_cast<int>(x)}));
  const std::vector<Subgroup> cyclic(found.begin(), found.end());
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<int> gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        Subgroup j = generated_subgroup(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
  Subgroup out;
  out.reserve(h.size());
  const int xi = g.inv(x);
  for (int e : h) out.push_back(g.mul(g.mul(xi, e), x));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (conjugate(g, h, static_cast<int>(x)) == h) out.push_back(static_cast<int>(x));
  }
  return out;
}

bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (k.size() % h.size() != 0) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Subgroup c = conjugate(g, h, static_cast<int>(x));
    if (std::includes(k.begin(), k.end(), c.begin(), c.end())) return true;
  }
  return false;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, std::size_t cap) {
  const std::vector<Subgroup> all = subgroups(g, cap);
  std::set<Subgroup> assigned;
  std::vector<SubgroupClass> out;
  for (const auto& h : all) {
    if (assigned.count(h)) continue;
    std::set<Subgroup> conj;
    for (std::size_t x = 0; x < g.order(); ++x) conj.insert(conjugate(g, h, static_cast<int>(x)));
    SubgroupClass c;
    c.conjugates.assign(conj.begin(), conj.end());
    c.representative = c.conjugates.front();
    c.normalizer = normalizer(g, c.representative);
    c.weyl_order = c.normalizer.size() / c.representative.size();
    assigned.insert(conj.begin(), conj.end());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.size() != b.representative.size()) return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
  return out;
}

std::size_t class_index(const FiniteGroup& g, const std::vector<SubgroupClass>& classes,
                        const std::vector<int>& h) {
  Subgroup s = h;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!is_subgroup(g, s)) throw std::invalid_argument("element set is not a subgroup");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].conjugates.begin(), classes[i].conjugates.end(), s)) return i;
  }
  throw std::invalid_argument("subgroup not found among classes");
}

std::vector<std::string> class_labels(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& k) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    for (int e : k) coset.push_back(g.mul(static_cast<int>(x), e));
    std::sort(coset.begin(), coset.end());
    for (int e : coset) seen[e] = 1;
    out.push_back(std::move(coset));
  }
  return out;
}

WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("weyl_group: not a subgroup");
  const Subgroup n = normalizer(g, h);
  std::vector<int> coset_of(g.order(), -1);
  WeylGroup out;
  for (int x : n) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(out.coset_reps.size());
    out.coset_reps.push_back(x);
    for (int e : h) coset_of[g.mul(x, e)] = id;
  }
  const std::size_t m = out.coset_reps.size();
  std::vector<int> t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = coset_of[g.mul(out.coset_reps[a], out.coset_reps[b])];
  }
  std::vector<std::string> names;
  for (int r : out.coset_reps) names.push_back(g.names()[r] + "H");
  out.group = FiniteGroup(m, std::move(t), std::move(names));
  return out;
}

std::size_t fixed_point_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::size_t count = 0;
  for (const auto& coset : left_cosets(g, k)) {
    const Subgroup c = conjugate(g, h, coset.front());
    if (std::includes(k.begin(), k.end(), c.begin(), c.end())) ++count;
  }
  return count;
}

QMatrix table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes) {
  const std::size_t n = classes.size();
  QMatrix ch(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      ch(r, c) = fixed_point_count(g, classes[r].representative, classes[c].representative);
    }
  }
  ch.set_labels(class_labels(n));
  return ch;
}

QMatrix table_of_marks(const FiniteGroup& g) { return table_of_marks(g, subgroup_classes(g, g.order())); }

void validate_right_action(const FiniteGroup& g, const RightGSet& t) {
  if (t.action.size() != g.order()) throw std::invalid_argument("action table has wrong number of group elements");
  for (const auto& row : t.action) {
    if (row.size() != t.size) throw std::invalid_argument("action row has wrong length");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= t.size) throw std::invalid_argument("action value out of range");
    }
  }
  for (std::size_t s = 0; s < t.size; ++s) {
    if (t.action[0][s] != static_cast<int>(s)) throw std::invalid_argument("identity does not act trivially");
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t s = 0; s < t.size; ++s) {
        // (s·a)·b = s·(ab)
        if (t.action[b][t.action[a][s]] != t.action[ab][s]) throw std::invalid_argument("not a right action");
      }
    }
  }
}

std::vector<std::vector<int>> orbits(const RightGSet& t) {
  std::vector<char> seen(t.size, 0);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < t.size; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (const auto& row : t.action) {
      const int y = row[s];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace eicat
