#include "eicat/moebius.hpp"

#include "eicat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eicat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_ei(const FiniteCategory& cat, const char* what) {
  const auto r = classify(cat);
  if (!r.is_ei) {
    throw PreconditionError(std::string(what) + " requires an EI-category; endomorphism " +
                            cat.morphism(r.ei_witness->first).name + " is not invertible");
  }
}

}  // namespace

std::size_t IsoPoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::invalid_argument("unknown iso class '" + label + "'");
}

IsoPoset iso_order(const FiniteCategory& cat) {
  require_ei(cat, "iso_order");
  const auto classes = iso_classes(cat);
  const std::size_t k = classes.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = !cat.hom(classes[i][0], classes[j][0]).empty();
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (leq[i][j] && leq[j][i]) throw InternalAssertion("iso order is not antisymmetric");
    }
  }
  // Longest chain below each class, by repeated relaxation (k rounds suffice).
  std::vector<std::size_t> len(k, 0);
  for (std::size_t round = 0; round < k; ++round) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        if (i != j && leq[i][j]) len[j] = std::max(len[j], len[i] + 1);
      }
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return classes[a][0] < classes[b][0];
  });
  IsoPoset p;
  p.class_of.assign(cat.num_objects(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& cls = classes[order[i]];
    p.reps.push_back(cls[0]);
    p.members.push_back(cls);
    p.length.push_back(len[order[i]]);
    p.labels.push_back(cat.object_name(cls[0]));
    p.aut.push_back(automorphism_group(cat, cls[0]));
    for (int x : cls) p.class_of[x] = static_cast<int>(i);
  }
  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) p.leq[i][j] = leq[order[i]][order[j]];
  }
  return p;
}

std::vector<Chain> enumerate_chains(const IsoPoset& p, std::size_t bottom, std::size_t top, std::size_t l) {
  if (bottom >= p.size() || top >= p.size()) throw std::invalid_argument("enumerate_chains: class out of range");
  std::vector<Chain> out;
  Chain cur{bottom};
  auto dfs = [&](auto&& self) -> void {
    const std::size_t last = cur.back();
    if (cur.size() == l + 1) {
      if (last == top) out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(last, j) || !p.leq[j][top]) continue;
      cur.push_back(j);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::vector<Chain> enumerate_chains(const IsoPoset& p, const std::string& bottom, const std::string& top,
                                    std::size_t l) {
  return enumerate_chains(p, p.index_of(bottom), p.index_of(top), l);
}

namespace {

// S(c) for the chain built so far, with actions of aut(top) and aut(bottom).
struct Stage {
  std::size_t top = 0;
  ChainBiset biset;
};

Stage initial_stage(const IsoPoset& p, std::size_t y) {
  Stage s;
  s.top = y;
  const auto& aut = p.aut[y];
  const std::size_t n = aut.morphisms.size();
  for (int m : aut.morphisms) s.biset.elements.push_back({m});
  s.biset.left.assign(n, std::vector<int>(n));
  s.biset.right.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t t = 0; t < n; ++t) {
      s.biset.left[a][t] = aut.group.mul(static_cast<int>(a), static_cast<int>(t));
      s.biset.right[t][a] = aut.group.mul(static_cast<int>(t), static_cast<int>(a));
    }
  }
  return s;
}

Stage first_step(const FiniteCategory& cat, const IsoPoset& p, std::size_t y, std::size_t x) {
  Stage s;
  s.top = x;
  const auto& homs = cat.hom(p.reps[y], p.reps[x]);
  std::vector<int> index(cat.num_morphisms(), -1);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    index[homs[i]] = static_cast<int>(i);
    s.biset.elements.push_back({homs[i]});
  }
  const auto& top_aut = p.aut[x].morphisms;
  const auto& bottom_aut = p.aut[y].morphisms;
  s.biset.left.assign(top_aut.size(), std::vector<int>(homs.size()));
  s.biset.right.assign(homs.size(), std::vector<int>(bottom_aut.size()));
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t a = 0; a < top_aut.size(); ++a) s.biset.left[a][i] = index[cat.compose(top_aut[a], homs[i])];
    for (std::size_t b = 0; b < bottom_aut.size(); ++b) {
      s.biset.right[i][b] = index[cat.compose(homs[i], bottom_aut[b])];
    }
  }
  return s;
}

// mor(x_k, x) ×_{aut(x_k)} S.
Stage extend(const FiniteCategory& cat, const IsoPoset& p, const Stage& prev, std::size_t x) {
  const std::size_t k = prev.top;
  const auto& homs = cat.hom(p.reps[k], p.reps[x]);
  const std::size_t m = homs.size(), n = prev.biset.size();
  std::vector<int> index(cat.num_morphisms(), -1);
  for (std::size_t i = 0; i < m; ++i) index[homs[i]] = static_cast<int>(i);
  const auto& mid_aut = p.aut[k].morphisms;
  auto pair_id = [n](std::size_t f, std::size_t s) { return static_cast<int>(f * n + s); };

  UnionFind uf(m * n);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t a = 0; a < mid_aut.size(); ++a) {
      const std::size_t fa = static_cast<std::size_t>(index[cat.compose(homs[f], mid_aut[a])]);
      for (std::size_t s = 0; s < n; ++s) uf.unite(pair_id(fa, s), pair_id(f, static_cast<std::size_t>(prev.biset.left[a][s])));
    }
  }
  std::map<int, std::vector<int>> best;  // root -> least tuple
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> tuple{homs[f]};
      const auto& rest = prev.biset.elements[s];
      tuple.insert(tuple.end(), rest.begin(), rest.end());
      auto [it, inserted] = best.emplace(uf.find(pair_id(f, s)), tuple);
      if (!inserted && tuple < it->second) it->second = std::move(tuple);
    }
  }
  std::vector<std::pair<std::vector<int>, int>> sorted;
  for (auto& [root, tuple] : best) sorted.emplace_back(std::move(tuple), root);
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> id_of_root;
  Stage out;
  out.top = x;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    id_of_root[sorted[i].second] = static_cast<int>(i);
    out.biset.elements.push_back(std::move(sorted[i].first));
  }
  auto id_of = [&](std::size_t f, std::size_t s) { return id_of_root.at(uf.find(pair_id(f, s))); };

  const auto& top_aut = p.aut[x].morphisms;
  const std::size_t bottom_size = prev.biset.right.empty() ? 0 : prev.biset.right[0].size();
  const std::size_t count = out.biset.size();
  out.biset.left.assign(top_aut.size(), std::vector<int>(count, -1));
  out.biset.right.assign(count, std::vector<int>(bottom_size, -1));
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t s = 0; s < n; ++s) {
      const int t = id_of(f, s);
      for (std::size_t a = 0; a < top_aut.size(); ++a) {
        const int v = id_of(static_cast<std::size_t>(index[cat.compose(top_aut[a], homs[f])]), s);
        int& slot = out.biset.left[a][t];
        if (slot < 0) slot = v;
        else if (slot != v) throw InternalAssertion("left action on chain biset is not well defined");
      }
      for (std::size_t b = 0; b < bottom_size; ++b) {
        const int v = id_of(f, static_cast<std::size_t>(prev.biset.right[s][b]));
        int& slot = out.biset.right[t][b];
        if (slot < 0) slot = v;
        else if (slot != v) throw InternalAssertion("right action on chain biset is not well defined");
      }
    }
  }
  return out;
}

RightGSet right_set(const ChainBiset& b, std::size_t group_order) {
  RightGSet t;
  t.size = b.size();
  t.action.assign(group_order, std::vector<int>(t.size));
  for (std::size_t s = 0; s < t.size; ++s) {
    for (std::size_t g = 0; g < group_order; ++g) t.action[g][s] = b.right[s][g];
  }
  return t;
}

// Left orbits of the biset with the induced right action.
RightGSet left_orbit_set(const ChainBiset& b, std::size_t group_order) {
  UnionFind uf(b.size());
  for (const auto& row : b.left) {
    for (std::size_t s = 0; s < b.size(); ++s) uf.unite(static_cast<int>(s), row[s]);
  }
  std::map<int, int> id;
  for (std::size_t s = 0; s < b.size(); ++s) id.emplace(uf.find(static_cast<int>(s)), static_cast<int>(id.size()));
  RightGSet t;
  t.size = id.size();
  t.action.assign(group_order, std::vector<int>(t.size));
  for (std::size_t s = 0; s < b.size(); ++s) {
    const int o = id.at(uf.find(static_cast<int>(s)));
    for (std::size_t g = 0; g < group_order; ++g) t.action[g][o] = id.at(uf.find(b.right[s][g]));
  }
  return t;
}

}  // namespace

ChainBiset chain_biset(const FiniteCategory& cat, const IsoPoset& p, const Chain& c) {
  if (c.empty()) throw std::invalid_argument("chain_biset: empty chain");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p.size()) throw std::invalid_argument("chain_biset: class out of range");
    if (i > 0 && !p.less(c[i - 1], c[i])) throw std::invalid_argument("chain_biset: chain is not strictly increasing");
  }
  if (c.size() == 1) return initial_stage(p, c[0]).biset;
  Stage s = first_step(cat, p, c[0], c[1]);
  for (std::size_t i = 2; i < c.size(); ++i) s = extend(cat, p, s, c[i]);
  return s.biset;
}

Rational perm_module_dim(const RightGSet& t, const FiniteGroup& g) {
  validate_right_action(g, t);
  Rational by_orbits;
  for (const auto& orbit : orbits(t)) {
    const int rep = orbit.front();
    long stab = 0;
    for (std::size_t a = 0; a < g.order(); ++a) stab += t.action[a][rep] == rep;
    by_orbits += rat(1, stab);
  }
  const Rational by_size = rat(static_cast<long>(t.size), static_cast<long>(g.order()));
  if (by_orbits != by_size) throw InternalAssertion("orbit-stabilizer count disagrees with |T|/|G|");
  return by_size;
}

std::size_t double_coset_count(const ChainBiset& b) {
  UnionFind uf(b.size());
  for (const auto& row : b.left) {
    for (std::size_t s = 0; s < b.size(); ++s) uf.unite(static_cast<int>(s), row[s]);
  }
  for (std::size_t s = 0; s < b.size(); ++s) {
    for (int v : b.right[s]) uf.unite(static_cast<int>(s), v);
  }
  std::size_t count = 0;
  for (std::size_t s = 0; s < b.size(); ++s) count += uf.find(static_cast<int>(s)) == static_cast<int>(s);
  return count;
}

std::size_t left_orbit_count(const ChainBiset& b) {
  UnionFind uf(b.size());
  for (const auto& row : b.left) {
    for (std::size_t s = 0; s < b.size(); ++s) uf.unite(static_cast<int>(s), row[s]);
  }
  std::size_t count = 0;
  for (std::size_t s = 0; s < b.size(); ++s) count += uf.find(static_cast<int>(s)) == static_cast<int>(s);
  return count;
}

QMatrix omega_bar2(const FiniteCategory& cat, const IsoPoset& p) {
  const std::size_t k = p.size();
  QMatrix w(k, k);
  for (std::size_t y = 0; y < k; ++y) {
    const long aut = static_cast<long>(p.aut[y].morphisms.size());
    for (std::size_t x = 0; x < k; ++x) {
      w(y, x) = rat(static_cast<long>(cat.hom(p.reps[y], p.reps[x]).size()), aut);
    }
  }
  w.set_labels(p.labels);
  if (!w.is_upper_triangular()) throw InternalAssertion("omega_bar2 is not upper triangular in class order");
  return w;
}

QMatrix omega_bar2(const FiniteCategory& cat) { return omega_bar2(cat, iso_order(cat)); }

namespace {

struct ChainSums {
  QMatrix mu;
  QVector chi_f;
  QVector chi_f2;
  bool truncated = false;
};

ChainSums chain_sums(const FiniteCategory& cat, const IsoPoset& p, const ChainOptions& opts) {
  const std::size_t k = p.size();
  ChainSums out;
  out.mu = QMatrix(k, k);
  std::vector<Rational> chi_f(k), chi_f2(k);
  for (std::size_t y = 0; y < k; ++y) {
    const FiniteGroup& aut_y = p.aut[y].group;
    const std::size_t ny = aut_y.order();
    auto visit = [&](const Stage& s, std::size_t l) {
      const Rational sign = (l % 2 == 0) ? 1 : -1;
      out.mu(y, s.top) += sign * perm_module_dim(right_set(s.biset, ny), aut_y);
      chi_f[y] += sign * Rational(static_cast<long>(double_coset_count(s.biset)));
      chi_f2[y] += sign * perm_module_dim(left_orbit_set(s.biset, ny), aut_y);
    };
    auto dfs = [&](auto&& self, const Stage& s, std::size_t l) -> void {
      visit(s, l);
      for (std::size_t x = 0; x < k; ++x) {
        if (!p.less(s.top, x)) continue;
        if (opts.max_chain_length && l + 1 > *opts.max_chain_length) {
          out.truncated = true;
          continue;
        }
        const Stage next = l == 0 ? first_step(cat, p, y, x) : extend(cat, p, s, x);
        self(self, next, l + 1);
      }
    };
    dfs(dfs, initial_stage(p, y), 0);
  }
  out.mu.set_labels(p.labels);
  out.chi_f = QVector(std::move(chi_f), p.labels);
  out.chi_f2 = QVector(std::move(chi_f2), p.labels);
  return out;
}

}  // namespace

QMatrix mu_bar2_chains(const FiniteCategory& cat, const ChainOptions& opts) {
  require_ei(cat, "mu_bar2_chains");
  const IsoPoset p = iso_order(cat);
  return chain_sums(cat, p, opts).mu;
}

IntegralMoebius integral_moebius(const FiniteCategory& cat) {
  const auto r = classify(cat);
  if (!r.has_trivial_endomorphisms) {
    throw PreconditionError("integral_moebius requires trivial endomorphisms; " +
                            cat.morphism(r.trivial_endo_witness->first).name + " is a nonidentity endomorphism");
  }
  if (!r.is_skeletal) throw PreconditionError("integral_moebius requires a skeletal category");
  const std::size_t n = cat.num_objects();
  IntegralMoebius out;
  out.a = QMatrix(n, n);
  QMatrix step(n, n);  // step(x, y) = #non-identity morphisms y -> x
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const long count = static_cast<long>(cat.hom(static_cast<int>(y), static_cast<int>(x)).size());
      out.a(x, y) = count;
      step(x, y) = x == y ? count - 1 : count;
    }
  }
  out.b = QMatrix::identity(n);
  QMatrix paths = QMatrix::identity(n);
  for (std::size_t l = 1; l <= n; ++l) {
    paths = step * paths;
    if (paths == QMatrix(n, n)) break;
    if (l == n) throw InternalAssertion("non-identity paths of unbounded length");
    out.b = (l % 2 == 1) ? out.b - paths : out.b + paths;
  }
  out.a.set_labels(cat.objects());
  out.b.set_labels(cat.objects());
  return out;
}

NerveEuler nerve_euler_characteristic(const FiniteCategory& cat) {
  NerveEuler out;
  const auto r = classify(cat);
  if (!r.has_trivial_endomorphisms) {
    out.note = "chi_nerve omitted: nontrivial endomorphism " + cat.morphism(r.trivial_endo_witness->first).name;
    return out;
  }
  const FiniteCategory* target = &cat;
  FiniteCategory skel;
  if (!r.is_skeletal) {
    skel = *skeleton(std::make_shared<const FiniteCategory>(cat)).category;
    target = &skel;
    out.note = "chi_nerve computed on the skeleton";
  }
  const auto im = integral_moebius(*target);
  out.value = im.b.sum().numerator();
  return out;
}

EulerReport euler_characteristics(const FiniteCategory& cat, const ChainOptions& opts) {
  require_ei(cat, "euler_characteristics");
  const IsoPoset p = iso_order(cat);
  ChainSums sums = chain_sums(cat, p, opts);
  EulerReport rep;
  rep.chi_f = std::move(sums.chi_f);
  rep.chi_f2 = std::move(sums.chi_f2);
  rep.mu_bar2 = std::move(sums.mu);
  rep.chi = rep.chi_f.sum();
  rep.chi2 = rep.chi_f2.sum();
  if (!rep.chi_f.is_integral()) throw InternalAssertion("functorial Euler characteristic is not integral");
  if (sums.truncated) rep.warnings.push_back("chain sums truncated by max_chain_length");
  NerveEuler nerve = nerve_euler_characteristic(cat);
  rep.chi_nerve = nerve.value;
  if (!nerve.note.empty()) rep.warnings.push_back(nerve.note);
  return rep;
}

QVector chi_f2_via_eta(const FiniteCategory& cat) {
  require_ei(cat, "chi_f2_via_eta");
  const auto r = classify(cat);
  if (!r.is_free) {
    throw PreconditionError("chi_f2_via_eta requires a free EI-category; " + cat.morphism(r.free_witness->first).name +
                            " fixes " + cat.morphism(r.free_witness->second).name);
  }
  const IsoPoset p = iso_order(cat);
  const QMatrix mu = chain_sums(cat, p, {}).mu;
  std::vector<Rational> eta;
  for (const auto& a : p.aut) eta.push_back(rat(1, static_cast<long>(a.morphisms.size())));
  QVector out = mu * QVector(std::move(eta), p.labels);
  out.set_labels(p.labels);
  return out;
}

}  // namespace eicat
