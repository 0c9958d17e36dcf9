#include "eicat/constructions.hpp"

#include "eicat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eicat {

FiniteCategory opposite(const FiniteCategory& cat) {
  std::vector<Morphism> morphs;
  for (const auto& m : cat.morphisms()) morphs.push_back({m.name, m.cod, m.dom});
  return FiniteCategory::from_function(cat.objects(), std::move(morphs),
                                       [&](int g, int f) { return cat.compose(f, g); });
}

FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b) {
  const int na = static_cast<int>(a.num_objects()), nb = static_cast<int>(b.num_objects());
  const int ma = static_cast<int>(a.num_morphisms()), mb = static_cast<int>(b.num_morphisms());
  std::vector<std::string> objects;
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) objects.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  }
  std::vector<Morphism> morphs;
  std::vector<std::pair<int, int>> parts;
  std::vector<int> index(static_cast<std::size_t>(ma) * mb, -1);
  auto add = [&](int f, int g) {
    index[static_cast<std::size_t>(f) * mb + g] = static_cast<int>(morphs.size());
    parts.emplace_back(f, g);
    morphs.push_back({"(" + a.morphism(f).name + "," + b.morphism(g).name + ")", a.dom(f) * nb + b.dom(g),
                      a.cod(f) * nb + b.cod(g)});
  };
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) add(x, y);
  }
  for (int f = 0; f < ma; ++f) {
    for (int g = 0; g < mb; ++g) {
      if (a.is_identity(f) && b.is_identity(g)) continue;
      add(f, g);
    }
  }
  return FiniteCategory::from_function(std::move(objects), std::move(morphs), [&](int p, int q) {
    const int f = a.compose(parts[p].first, parts[q].first);
    const int g = b.compose(parts[p].second, parts[q].second);
    return index[static_cast<std::size_t>(f) * mb + g];
  });
}

FiniteCategory coproduct(const FiniteCategory& a, const FiniteCategory& b) {
  const int na = static_cast<int>(a.num_objects());
  std::vector<std::string> objects;
  for (const auto& o : a.objects()) objects.push_back("0." + o);
  for (const auto& o : b.objects()) objects.push_back("1." + o);
  std::vector<Morphism> morphs;
  std::vector<std::pair<int, int>> origin;  // (side, morphism)
  std::vector<int> index_a(a.num_morphisms()), index_b(b.num_morphisms());
  auto add = [&](int side, int f) {
    const auto& c = side == 0 ? a : b;
    const int shift = side == 0 ? 0 : na;
    (side == 0 ? index_a : index_b)[f] = static_cast<int>(morphs.size());
    origin.emplace_back(side, f);
    morphs.push_back({std::to_string(side) + "." + c.morphism(f).name, c.dom(f) + shift, c.cod(f) + shift});
  };
  for (int x = 0; x < na; ++x) add(0, x);
  for (int x = 0; x < static_cast<int>(b.num_objects()); ++x) add(1, x);
  for (int f = na; f < static_cast<int>(a.num_morphisms()); ++f) add(0, f);
  for (int f = static_cast<int>(b.num_objects()); f < static_cast<int>(b.num_morphisms()); ++f) add(1, f);
  return FiniteCategory::from_function(std::move(objects), std::move(morphs), [&](int g, int f) {
    if (origin[g].first == 0) return index_a[a.compose(origin[g].second, origin[f].second)];
    return index_b[b.compose(origin[g].second, origin[f].second)];
  });
}

FiniteCategory delooping(const FiniteGroup& g) {
  std::vector<Morphism> morphs;
  for (std::size_t x = 0; x < g.order(); ++x) morphs.push_back({g.names()[x], 0, 0});
  return FiniteCategory::from_function({"*"}, std::move(morphs), [&](int a, int b) { return g.mul(a, b); });
}

FiniteCategory poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(names.size());
  if (leq.size() != names.size()) throw std::invalid_argument("poset relation has wrong size");
  for (int x = 0; x < n; ++x) {
    if (leq[x].size() != names.size()) throw std::invalid_argument("poset relation has wrong size");
    if (!leq[x][x]) throw PreconditionError("order relation is not reflexive");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (leq[x][y] && leq[y][z] && !leq[x][z]) throw PreconditionError("order relation is not transitive");
      }
    }
  }
  std::vector<Morphism> morphs;
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    index[static_cast<std::size_t>(x) * n + x] = x;
    morphs.push_back({names[x] + "<=" + names[x], x, x});
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq[x][y]) continue;
      index[static_cast<std::size_t>(x) * n + y] = static_cast<int>(morphs.size());
      morphs.push_back({names[x] + "<=" + names[y], x, y});
    }
  }
  return FiniteCategory::from_function(names, morphs, [&](int g, int f) {
    return index[static_cast<std::size_t>(morphs[f].dom) * n + morphs[g].cod];
  });
}

FiniteCategory path_category(const std::vector<std::string>& objects, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(objects.size());
  for (const auto& e : edges) {
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  // Paths as edge index sequences in traversal order.
  std::vector<std::vector<int>> paths;
  std::vector<Morphism> morphs;
  for (int x = 0; x < n; ++x) {
    paths.push_back({});
    morphs.push_back({"id_" + objects[x], x, x});
  }
  std::vector<std::vector<int>> frontier;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) frontier.push_back({e});
  const std::size_t limit = 100000;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      if (p.size() >= static_cast<std::size_t>(n)) throw PreconditionError("edge graph has a cycle");
      std::string name;
      for (auto it = p.rbegin(); it != p.rend(); ++it) name += (name.empty() ? "" : ".") + edges[*it].name;
      morphs.push_back({name, edges[p.front()].source, edges[p.back()].target});
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].source != edges[p.back()].target) continue;
        auto q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
      paths.push_back(std::move(p));
      if (paths.size() > limit) throw PreconditionError("path category too large");
    }
    frontier = std::move(next);
  }
  std::map<std::vector<int>, int> index;
  for (int i = n; i < static_cast<int>(paths.size()); ++i) index[paths[i]] = i;
  return FiniteCategory::from_function(objects, morphs, [&](int g, int f) {
    if (g < n) return f;
    if (f < n) return g;
    std::vector<int> p = paths[f];
    p.insert(p.end(), paths[g].begin(), paths[g].end());
    return index.at(p);
  });
}

FiniteCategory indiscrete(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<Morphism> morphs;
  std::vector<int> index(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    index[x * n + x] = static_cast<int>(x);
    morphs.push_back({objects[x] + "->" + objects[x], static_cast<int>(x), static_cast<int>(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      index[x * n + y] = static_cast<int>(morphs.size());
      morphs.push_back({objects[x] + "->" + objects[y], static_cast<int>(x), static_cast<int>(y)});
    }
  }
  return FiniteCategory::from_function(objects, morphs, [&](int g, int f) {
    return index[static_cast<std::size_t>(morphs[f].dom) * n + morphs[g].cod];
  });
}

void validate_biset(const FiniteGroup& g, const FiniteGroup& h, const Biset& s) {
  if (s.left.size() != g.order() || s.right.size() != s.size) throw PreconditionError("biset tables have wrong size");
  for (const auto& row : s.left) {
    if (row.size() != s.size) throw PreconditionError("biset left table has wrong size");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= s.size) throw PreconditionError("biset left value out of range");
    }
  }
  for (const auto& row : s.right) {
    if (row.size() != h.order()) throw PreconditionError("biset right table has wrong size");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= s.size) throw PreconditionError("biset right value out of range");
    }
  }
  for (std::size_t x = 0; x < s.size; ++x) {
    if (s.left[0][x] != static_cast<int>(x) || s.right[x][0] != static_cast<int>(x)) {
      throw PreconditionError("identity does not act trivially on the biset");
    }
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (s.left[a][s.left[b][x]] != s.left[g.mul(static_cast<int>(a), static_cast<int>(b))][x]) {
          throw PreconditionError("left biset table is not an action");
        }
      }
    }
    for (std::size_t a = 0; a < h.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) {
        if (s.right[s.right[x][a]][b] != s.right[x][h.mul(static_cast<int>(a), static_cast<int>(b))]) {
          throw PreconditionError("right biset table is not an action");
        }
      }
    }
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) {
        if (s.left[a][s.right[x][b]] != s.right[s.left[a][x]][b]) {
          throw PreconditionError("left and right biset actions do not commute");
        }
      }
    }
  }
}

FiniteCategory biset_category(const FiniteGroup& g, const FiniteGroup& h, const Biset& s) {
  validate_biset(g, h, s);
  const int nh = static_cast<int>(h.order()), ng = static_cast<int>(g.order());
  // Layout: id_x, id_y, H \ {e}, G \ {e}, S.
  std::vector<Morphism> morphs;
  std::vector<int> h_of, g_of, s_of;  // morphism -> element, -1 otherwise
  auto push = [&](std::string name, int dom, int cod, int hv, int gv, int sv) {
    morphs.push_back({std::move(name), dom, cod});
    h_of.push_back(hv);
    g_of.push_back(gv);
    s_of.push_back(sv);
  };
  push("h:" + h.names()[0], 0, 0, 0, -1, -1);
  push("g:" + g.names()[0], 1, 1, -1, 0, -1);
  for (int a = 1; a < nh; ++a) push("h:" + h.names()[a], 0, 0, a, -1, -1);
  for (int a = 1; a < ng; ++a) push("g:" + g.names()[a], 1, 1, -1, a, -1);
  for (int x = 0; x < static_cast<int>(s.size); ++x) push("s:" + std::to_string(x), 0, 1, -1, -1, x);
  std::vector<int> morph_of_h(nh), morph_of_g(ng), morph_of_s(s.size);
  for (int f = 0; f < static_cast<int>(morphs.size()); ++f) {
    if (h_of[f] >= 0) morph_of_h[h_of[f]] = f;
    if (g_of[f] >= 0) morph_of_g[g_of[f]] = f;
    if (s_of[f] >= 0) morph_of_s[s_of[f]] = f;
  }
  return FiniteCategory::from_function({"x", "y"}, morphs, [&](int p, int q) {
    if (h_of[p] >= 0) return morph_of_h[h.mul(h_of[p], h_of[q])];
    if (g_of[p] >= 0 && g_of[q] >= 0) return morph_of_g[g.mul(g_of[p], g_of[q])];
    if (g_of[p] >= 0) return morph_of_s[s.left[g_of[p]][s_of[q]]];
    return morph_of_s[s.right[s_of[p]][h_of[q]]];
  });
}

std::size_t left_orbit_count(const FiniteGroup& g, const Biset& s) {
  std::vector<char> seen(s.size, 0);
  std::size_t count = 0;
  for (std::size_t x = 0; x < s.size; ++x) {
    if (seen[x]) continue;
    ++count;
    for (std::size_t a = 0; a < g.order(); ++a) seen[s.left[a][x]] = 1;
  }
  return count;
}

std::size_t double_orbit_count(const FiniteGroup& g, const FiniteGroup& h, const Biset& s) {
  std::vector<char> seen(s.size, 0);
  std::size_t count = 0;
  for (std::size_t x = 0; x < s.size; ++x) {
    if (seen[x]) continue;
    ++count;
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) seen[s.right[s.left[a][x]][b]] = 1;
    }
  }
  return count;
}

bool left_action_is_free(const FiniteGroup& g, const Biset& s) {
  for (std::size_t a = 1; a < g.order(); ++a) {
    for (std::size_t x = 0; x < s.size; ++x) {
      if (s.left[a][x] == static_cast<int>(x)) return false;
    }
  }
  return true;
}

Biset regular_left_biset(const FiniteGroup& g) {
  Biset s;
  s.size = g.order();
  s.left.assign(g.order(), std::vector<int>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t x = 0; x < g.order(); ++x) s.left[a][x] = g.mul(static_cast<int>(a), static_cast<int>(x));
  }
  s.right.assign(g.order(), std::vector<int>(1));
  for (std::size_t x = 0; x < g.order(); ++x) s.right[x][0] = static_cast<int>(x);
  return s;
}

Biset point_biset(const FiniteGroup& g, const FiniteGroup& h) {
  Biset s;
  s.size = 1;
  s.left.assign(g.order(), std::vector<int>{0});
  s.right.assign(1, std::vector<int>(h.order(), 0));
  return s;
}

}  // namespace eicat
