#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <stdexcept>

namespace eicat::testing {

namespace {

bool closed(const FiniteGroup& g, const std::vector<int>& s) {
  std::vector<bool> in(g.order(), false);
  for (int x : s) in[x] = true;
  if (!in[0]) return false;
  for (int a : s) {
    if (!in[g.inv(a)]) return false;
    for (int b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<int> conj(const FiniteGroup& g, const std::vector<int>& h, int x) {
  std::vector<int> out;
  for (int a : h) out.push_back(g.mul(g.mul(g.inv(x), a), x));
  std::sort(out.begin(), out.end());
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) c += find(static_cast<int>(i)) == static_cast<int>(i);
    return c;
  }
};

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<std::vector<int>> brute_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 20) throw std::invalid_argument("brute_subgroups needs |G| <= 20");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(static_cast<int>(i));
    }
    if (closed(g, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<BruteClass> brute_classes(const FiniteGroup& g) {
  std::vector<BruteClass> out;
  std::set<std::vector<int>> seen;
  for (const auto& h : brute_subgroups(g)) {
    if (seen.count(h)) continue;
    std::set<std::vector<int>> cls;
    std::size_t normalizer = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto c = conj(g, h, static_cast<int>(x));
      if (c == h) ++normalizer;
      cls.insert(std::move(c));
    }
    seen.insert(cls.begin(), cls.end());
    out.push_back({*cls.begin(), cls.size(), normalizer / h.size()});
  }
  std::sort(out.begin(), out.end(), [](const BruteClass& a, const BruteClass& b) {
    return a.rep.size() != b.rep.size() ? a.rep.size() < b.rep.size() : a.rep < b.rep;
  });
  return out;
}

std::size_t brute_fixed_cosets(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& k) {
  std::set<std::vector<int>> cosets;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<int> c;
    for (int a : k) c.push_back(g.mul(static_cast<int>(x), a));
    std::sort(c.begin(), c.end());
    cosets.insert(std::move(c));
  }
  std::size_t fixed = 0;
  for (const auto& c : cosets) {
    bool ok = true;
    for (int a : h) {
      std::vector<int> moved;
      for (int y : c) moved.push_back(g.mul(a, y));
      std::sort(moved.begin(), moved.end());
      if (moved != c) {
        ok = false;
        break;
      }
    }
    fixed += ok;
  }
  return fixed;
}

std::vector<std::vector<std::int64_t>> brute_marks(const FiniteGroup& g) {
  const auto cls = brute_classes(g);
  std::vector<std::vector<std::int64_t>> m(cls.size(), std::vector<std::int64_t>(cls.size()));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      m[i][j] = static_cast<std::int64_t>(brute_fixed_cosets(g, cls[i].rep, cls[j].rep));
    }
  }
  return m;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& h) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (conj(g, h, static_cast<int>(x)) != h) return false;
  }
  return true;
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal) {
  if (!is_normal(g, normal)) throw std::invalid_argument("subgroup is not normal");
  std::vector<int> least(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    int m = static_cast<int>(g.order());
    for (int a : normal) m = std::min(m, g.mul(static_cast<int>(x), a));
    least[x] = m;
  }
  std::vector<int> reps(least.begin(), least.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  Quotient q;
  q.project.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    q.project[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), least[x]) - reps.begin());
  }
  const std::size_t m = reps.size();
  std::vector<int> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = q.project[g.mul(reps[a], reps[b])];
  }
  q.group = FiniteGroup(m, std::move(table));
  return q;
}

LeftGSet coset_union(const FiniteGroup& g, const std::vector<std::vector<int>>& subgroups) {
  LeftGSet x;
  x.action.assign(g.order(), {});
  for (const auto& k : subgroups) {
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(g.order(), -1);
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (coset_of[a] >= 0) continue;
      for (int b : k) coset_of[g.mul(static_cast<int>(a), b)] = static_cast<int>(cosets.size());
      cosets.push_back({static_cast<int>(a)});
    }
    for (std::size_t h = 0; h < g.order(); ++h) {
      for (const auto& c : cosets) {
        x.action[h].push_back(static_cast<int>(x.size) + coset_of[g.mul(static_cast<int>(h), c[0])]);
      }
    }
    x.size += cosets.size();
  }
  return x;
}

std::size_t count_fixed(const LeftGSet& x, const std::vector<int>& h) {
  std::size_t n = 0;
  for (std::size_t p = 0; p < x.size; ++p) {
    bool ok = true;
    for (int a : h) ok = ok && x.action[a][p] == static_cast<int>(p);
    n += ok;
  }
  return n;
}

FiniteCategory action_groupoid(const FiniteGroup& g, const LeftGSet& x) {
  const int n = static_cast<int>(x.size), m = static_cast<int>(g.order());
  std::vector<std::string> objects;
  for (int p = 0; p < n; ++p) objects.push_back("p" + std::to_string(p));
  auto index = [&](int a, int p) { return a == 0 ? p : n + p * (m - 1) + a - 1; };
  std::vector<Morphism> morphs(static_cast<std::size_t>(n) * m);
  std::vector<std::pair<int, int>> parts(morphs.size());
  for (int p = 0; p < n; ++p) {
    for (int a = 0; a < m; ++a) {
      const int i = index(a, p);
      morphs[i] = {g.names()[a] + "@" + objects[p], p, x.action[a][p]};
      parts[i] = {a, p};
    }
  }
  return FiniteCategory::from_function(std::move(objects), std::move(morphs), [&](int q, int f) {
    return index(g.mul(parts[q].first, parts[f].first), parts[f].second);
  });
}

FiniteCategory transport_category(const FiniteGroup& g, const LeftGSet& x,
                                  const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(x.size), m = static_cast<int>(g.order());
  std::vector<std::string> objects;
  for (int p = 0; p < n; ++p) objects.push_back("p" + std::to_string(p));
  std::vector<Morphism> morphs;
  std::map<std::tuple<int, int, int>, int> index;
  std::vector<int> element;
  for (int p = 0; p < n; ++p) {
    index[{p, p, 0}] = p;
    morphs.push_back({"id_" + objects[p], p, p});
    element.push_back(0);
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int a = 0; a < m; ++a) {
        if (p == q && a == 0) continue;
        if (!leq[x.action[a][p]][q]) continue;
        index[{p, q, a}] = static_cast<int>(morphs.size());
        morphs.push_back({g.names()[a] + ":" + objects[p] + "->" + objects[q], p, q});
        element.push_back(a);
      }
    }
  }
  return FiniteCategory::from_function(objects, morphs, [&](int h, int f) {
    return index.at({morphs[f].dom, morphs[h].cod, g.mul(element[h], element[f])});
  });
}

FiniteGroup random_small_group(Rng& rng) {
  static const char* menu[] = {"trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:2xcyclic:2", "sym:3",
                               "cyclic:6", "dihedral:4"};
  return build_group(menu[pick(rng, 0, 7)]);
}

FiniteCategory random_transport_category(Rng& rng) {
  static const char* menu[] = {"trivial", "cyclic:2", "cyclic:3", "cyclic:2xcyclic:2", "sym:3", "cyclic:4"};
  const FiniteGroup g = build_group(menu[pick(rng, 0, 5)]);
  const auto subs = brute_subgroups(g);
  std::vector<std::vector<int>> stabilizers;
  const int orbits = pick(rng, 1, 4);
  for (int i = 0; i < orbits; ++i) {
    // Skip orbits that would make the category large.
    std::vector<int> k;
    do {
      k = subs[pick(rng, 0, static_cast<int>(subs.size()) - 1)];
    } while (g.order() / k.size() > 3);
    stabilizers.push_back(k);
  }
  const LeftGSet x = coset_union(g, stabilizers);
  std::vector<int> orbit(x.size), level(orbits);
  {
    std::size_t p = 0;
    for (int i = 0; i < orbits; ++i) {
      level[i] = pick(rng, 0, 2);
      for (std::size_t c = 0; c < g.order() / stabilizers[i].size(); ++c) orbit[p++] = i;
    }
  }
  const int n = static_cast<int>(x.size);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p) leq[p][p] = true;
  const int tries = pick(rng, 0, 2 * n);
  for (int t = 0; t < tries; ++t) {
    const int p = pick(rng, 0, n - 1), q = pick(rng, 0, n - 1);
    if (level[orbit[p]] >= level[orbit[q]]) continue;
    for (std::size_t a = 0; a < g.order(); ++a) leq[x.action[a][p]][x.action[a][q]] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (leq[p][k] && leq[k][q]) leq[p][q] = true;
      }
    }
  }
  return transport_category(g, x, leq);
}

FiniteCategory random_path_category(Rng& rng, int max_objects) {
  const int n = pick(rng, 1, max_objects);
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  const int count = pick(rng, 0, n + 2);
  for (int e = 0; e < count && n > 1; ++e) {
    int s = pick(rng, 0, n - 2);
    int t = pick(rng, s + 1, n - 1);
    edges.push_back({"e" + std::to_string(e), s, t});
  }
  return path_category(objects, edges);
}

FiniteCategory random_poset(Rng& rng, int max_objects) {
  const int n = pick(rng, 1, max_objects);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(0.35);
  for (int i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (int j = i + 1; j < n; ++j) leq[i][j] = coin(rng);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return poset_category(names, leq);
}

FiniteCategory random_free_skeletal_ei(Rng& rng) {
  const int kind = pick(rng, 0, 5);
  if (kind == 0) return random_path_category(rng);
  if (kind == 1) return random_poset(rng);
  auto cat = std::make_shared<const FiniteCategory>(random_transport_category(rng));
  return *skeleton(cat).category;
}

RandomBiset random_biset(Rng& rng) {
  static const char* gmenu[] = {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:2xcyclic:2", "sym:3"};
  static const char* hmenu[] = {"trivial", "cyclic:2", "cyclic:3"};
  RandomBiset r{build_group(gmenu[pick(rng, 0, 4)]), build_group(hmenu[pick(rng, 0, 2)]), {}};
  const FiniteGroup gh = direct_product(r.g, r.h);
  const int nh = static_cast<int>(r.h.order());
  const auto subs = brute_subgroups(gh);
  const int pieces = pick(rng, 1, 3);
  r.s.left.assign(r.g.order(), {});
  for (int piece = 0; piece < pieces; ++piece) {
    const auto& l = subs[pick(rng, 0, static_cast<int>(subs.size()) - 1)];
    std::vector<int> coset_of(gh.order(), -1);
    std::vector<int> reps;
    for (std::size_t a = 0; a < gh.order(); ++a) {
      if (coset_of[a] >= 0) continue;
      for (int b : l) coset_of[gh.mul(static_cast<int>(a), b)] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(a));
    }
    const int offset = static_cast<int>(r.s.size);
    for (std::size_t a = 0; a < r.g.order(); ++a) {
      for (int rep : reps) r.s.left[a].push_back(offset + coset_of[gh.mul(static_cast<int>(a) * nh, rep)]);
    }
    for (int rep : reps) {
      std::vector<int> row;
      for (int b = 0; b < nh; ++b) row.push_back(offset + coset_of[gh.mul(r.h.inv(b), rep)]);
      r.s.right.push_back(std::move(row));
    }
    r.s.size += reps.size();
  }
  return r;
}

Functor functor_by_names(std::shared_ptr<const FiniteCategory> source, std::shared_ptr<const FiniteCategory> target,
                         const std::map<std::string, std::string>& morphism_names) {
  Functor p{source, target, std::vector<int>(source->num_objects(), -1),
            std::vector<int>(source->num_morphisms(), -1)};
  for (std::size_t f = 0; f < source->num_morphisms(); ++f) {
    const auto it = morphism_names.find(source->morphism(static_cast<int>(f)).name);
    if (it == morphism_names.end()) throw std::invalid_argument("unmapped morphism");
    const auto t = target->morphism_index(it->second);
    if (!t) throw std::invalid_argument("unknown target morphism " + it->second);
    p.morphism_map[f] = *t;
    p.object_map[source->dom(static_cast<int>(f))] = target->dom(*t);
    p.object_map[source->cod(static_cast<int>(f))] = target->cod(*t);
  }
  return p;
}

std::size_t orbit_count_left(const FiniteGroup& g, const Biset& s) {
  UnionFind uf(s.size);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t x = 0; x < s.size; ++x) uf.unite(static_cast<int>(x), s.left[a][x]);
  }
  return uf.count();
}

std::size_t orbit_count_double(const FiniteGroup& g, const FiniteGroup& h, const Biset& s) {
  UnionFind uf(s.size);
  for (std::size_t x = 0; x < s.size; ++x) {
    for (std::size_t a = 0; a < g.order(); ++a) uf.unite(static_cast<int>(x), s.left[a][x]);
    for (std::size_t b = 0; b < h.order(); ++b) uf.unite(static_cast<int>(x), s.right[x][b]);
  }
  return uf.count();
}

bool left_free(const FiniteGroup& g, const Biset& s) {
  for (std::size_t a = 1; a < g.order(); ++a) {
    for (std::size_t x = 0; x < s.size; ++x) {
      if (s.left[a][x] == static_cast<int>(x)) return false;
    }
  }
  return true;
}

Rational groupoid_cardinality(const FiniteCategory& groupoid) {
  const int n = static_cast<int>(groupoid.num_objects());
  std::vector<bool> done(n, false);
  Rational total;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    for (int y = 0; y < n; ++y) {
      if (!groupoid.hom(x, y).empty()) done[y] = true;
    }
    total += rat(1, static_cast<long>(groupoid.hom(x, x).size()));
  }
  return total;
}

std::vector<std::vector<BigInt>> recursive_moebius(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::vector<BigInt>> mu(n, std::vector<BigInt>(n, 0));
  std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
  std::function<BigInt(std::size_t, std::size_t)> rec = [&](std::size_t x, std::size_t y) -> BigInt {
    if (done[x][y]) return mu[x][y];
    BigInt v = 0;
    if (x == y) {
      v = 1;
    } else if (leq[x][y]) {
      for (std::size_t z = 0; z < n; ++z) {
        if (z != y && leq[x][z] && leq[z][y]) v -= rec(x, z);
      }
    }
    done[x][y] = true;
    return mu[x][y] = v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) rec(x, y);
  }
  return mu;
}

int classical_mu(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

BigInt nerve_by_enumeration(const FiniteCategory& cat) {
  BigInt total = static_cast<long>(cat.num_objects());
  std::function<void(int, long)> extend = [&](int f, long len) {
    total += (len % 2 == 0) ? 1 : -1;
    for (int g : cat.out(cat.cod(f))) {
      if (!cat.is_identity(g)) extend(g, len + 1);
    }
  };
  for (std::size_t f = cat.num_objects(); f < cat.num_morphisms(); ++f) extend(static_cast<int>(f), 1);
  return total;
}

}  // namespace eicat::testing
