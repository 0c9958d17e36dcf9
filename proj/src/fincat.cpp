#include "eicat/fincat.hpp"

#include "eicat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

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
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

std::string join_messages(const std::vector<Violation>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size() && i < 5; ++i) out += (i ? "; " : "") + vs[i].message;
  if (vs.size() > 5) out += "; ... (" + std::to_string(vs.size()) + " violations)";
  return out;
}

}  // namespace

void FiniteCategory::init(std::vector<std::string> objects, std::vector<Morphism> morphisms) {
  objects_ = std::move(objects);
  morphisms_ = std::move(morphisms);
  const std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  out_.assign(n, {});
  out_pos_.assign(morphisms_.size(), -1);
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    hom_[static_cast<std::size_t>(m.dom) * n + m.cod].push_back(static_cast<int>(f));
    out_pos_[f] = static_cast<int>(out_[m.dom].size());
    out_[m.dom].push_back(static_cast<int>(f));
  }
  composite_.assign(morphisms_.size(), {});
  inverse_.assign(morphisms_.size(), -1);
}

void FiniteCategory::compute_inverses() {
  const int m = static_cast<int>(morphisms_.size());
  inverse_.assign(morphisms_.size(), -1);
  for (int f = 0; f < m; ++f) {
    const int x = dom(f), y = cod(f);
    for (int g : hom(y, x)) {
      const int gf = compose(g, f), fg = compose(f, g);
      if (gf == x && fg == y) {
        inverse_[f] = g;
        break;
      }
    }
  }
}

std::optional<int> FiniteCategory::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> FiniteCategory::morphism_index(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.objects_ != b.objects_ || a.morphisms_.size() != b.morphisms_.size()) return false;
  for (std::size_t f = 0; f < a.morphisms_.size(); ++f) {
    const auto& x = a.morphisms_[f];
    const auto& y = b.morphisms_[f];
    if (x.name != y.name || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return a.composite_ == b.composite_;
}

std::vector<Violation> validate(const FiniteCategory& cat) {
  std::vector<Violation> out;
  const int n = static_cast<int>(cat.num_objects());
  const int m = static_cast<int>(cat.num_morphisms());
  auto name = [&](int f) { return cat.morphism(f).name; };
  if (m < n) {
    out.push_back({"identity", "fewer morphisms than objects"});
    return out;
  }
  for (int x = 0; x < n; ++x) {
    if (cat.dom(x) != x || cat.cod(x) != x) {
      out.push_back({"identity", "identity of object " + cat.object_name(x) + " is not an endomorphism of it"});
    }
  }
  if (!out.empty()) return out;
  bool table_ok = true;
  for (int f = 0; f < m; ++f) {
    for (int g : cat.out(cat.cod(f))) {
      const int gf = cat.compose(g, f);
      if (gf < 0 || gf >= m) {
        out.push_back({"missing-composite", "no composite for (" + name(g) + ", " + name(f) + ")"});
        table_ok = false;
      } else if (cat.dom(gf) != cat.dom(f) || cat.cod(gf) != cat.cod(g)) {
        out.push_back({"composite-type", "composite " + name(g) + "*" + name(f) + " = " + name(gf) +
                                             " has wrong domain or codomain"});
        table_ok = false;
      }
    }
  }
  if (!table_ok) return out;
  for (int f = 0; f < m; ++f) {
    if (cat.compose(cat.identity(cat.cod(f)), f) != f || cat.compose(f, cat.identity(cat.dom(f))) != f) {
      out.push_back({"identity", "identity law fails for " + name(f)});
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g : cat.out(cat.cod(f))) {
      const int gf = cat.compose(g, f);
      for (int h : cat.out(cat.cod(g))) {
        if (cat.compose(h, gf) != cat.compose(cat.compose(h, g), f)) {
          out.push_back({"associativity", "associativity fails for (h, g, f) = (" + name(h) + ", " + name(g) + ", " +
                                              name(f) + ")"});
        }
      }
    }
  }
  return out;
}

namespace {

// Structural checks on raw data; on success fills `cat` without checking
// the category laws.
std::vector<Violation> assemble(const CategoryData& data, FiniteCategory* cat) {
  std::vector<Violation> out;
  std::map<std::string, int> obj;
  for (const auto& o : data.objects) {
    if (!obj.emplace(o, static_cast<int>(obj.size())).second) out.push_back({"duplicate-object", "duplicate object " + o});
  }
  std::map<std::string, std::size_t> raw;
  for (std::size_t i = 0; i < data.morphisms.size(); ++i) {
    const auto& a = data.morphisms[i];
    if (!raw.emplace(a.id, i).second) out.push_back({"duplicate-morphism", "duplicate morphism " + a.id});
    if (!obj.count(a.dom) || !obj.count(a.cod)) {
      out.push_back({"unknown-object", "morphism " + a.id + " refers to an unknown object"});
    }
  }
  if (!out.empty()) return out;
  std::map<std::string, std::string> ident;
  for (const auto& [o, f] : data.identities) {
    if (!obj.count(o)) {
      out.push_back({"identity", "identity given for unknown object " + o});
      continue;
    }
    if (!ident.emplace(o, f).second) out.push_back({"identity", "two identities given for object " + o});
    auto it = raw.find(f);
    if (it == raw.end()) {
      out.push_back({"identity", "identity of " + o + " is an unknown morphism " + f});
    } else if (data.morphisms[it->second].dom != o || data.morphisms[it->second].cod != o) {
      out.push_back({"identity", "identity of " + o + " is not an endomorphism of " + o});
    }
  }
  for (const auto& o : data.objects) {
    if (!ident.count(o)) out.push_back({"identity", "no identity for object " + o});
  }
  std::set<std::string> ident_morphs;
  for (const auto& [o, f] : ident) {
    if (!ident_morphs.insert(f).second) out.push_back({"identity", "morphism " + f + " is the identity of two objects"});
  }
  if (!out.empty()) return out;

  std::vector<Morphism> morphs;
  std::map<std::string, int> index;
  for (const auto& o : data.objects) {
    const auto& a = data.morphisms[raw.at(ident.at(o))];
    index[a.id] = static_cast<int>(morphs.size());
    morphs.push_back({a.id, obj.at(a.dom), obj.at(a.cod)});
  }
  for (const auto& a : data.morphisms) {
    if (ident_morphs.count(a.id)) continue;
    index[a.id] = static_cast<int>(morphs.size());
    morphs.push_back({a.id, obj.at(a.dom), obj.at(a.cod)});
  }
  std::unordered_map<long long, int> table;
  const long long mm = static_cast<long long>(morphs.size());
  for (const auto& c : data.composition) {
    auto g = index.find(c.g), f = index.find(c.f), gf = index.find(c.gf);
    if (g == index.end() || f == index.end() || gf == index.end()) {
      out.push_back({"unknown-morphism", "composition entry [" + c.g + ", " + c.f + ", " + c.gf +
                                             "] refers to an unknown morphism"});
      continue;
    }
    if (morphs[f->second].cod != morphs[g->second].dom) {
      out.push_back({"not-composable", "composition entry for non-composable pair (" + c.g + ", " + c.f + ")"});
      continue;
    }
    if (!table.emplace(g->second * mm + f->second, gf->second).second) {
      out.push_back({"duplicate-composite", "two composition entries for (" + c.g + ", " + c.f + ")"});
    }
  }
  if (!out.empty()) return out;
  *cat = FiniteCategory::from_function(data.objects, std::move(morphs), [&](int g, int f) {
    auto it = table.find(g * mm + f);
    return it == table.end() ? -1 : it->second;
  });
  return out;
}

}  // namespace

std::vector<Violation> validate(const CategoryData& data) {
  FiniteCategory cat;
  auto out = assemble(data, &cat);
  if (!out.empty()) return out;
  return validate(cat);
}

FiniteCategory FiniteCategory::from_data(const CategoryData& data) {
  FiniteCategory cat;
  auto vs = assemble(data, &cat);
  if (vs.empty()) vs = validate(cat);
  if (!vs.empty()) throw PreconditionError("invalid category: " + join_messages(vs));
  return cat;
}

CategoryData FiniteCategory::to_data() const {
  CategoryData d;
  d.objects = objects_;
  for (const auto& m : morphisms_) d.morphisms.push_back({m.name, objects_[m.dom], objects_[m.cod]});
  for (std::size_t x = 0; x < objects_.size(); ++x) d.identities.emplace_back(objects_[x], morphisms_[x].name);
  for (std::size_t g = 0; g < morphisms_.size(); ++g) {
    for (std::size_t f = 0; f < morphisms_.size(); ++f) {
      if (morphisms_[f].cod != morphisms_[g].dom) continue;
      const int gf = compose(static_cast<int>(g), static_cast<int>(f));
      d.composition.push_back({morphisms_[g].name, morphisms_[f].name, morphisms_[gf].name});
    }
  }
  return d;
}

PredicateReport classify(const FiniteCategory& cat) {
  PredicateReport r;
  const int n = static_cast<int>(cat.num_objects());
  const int m = static_cast<int>(cat.num_morphisms());
  for (int f = 0; f < m; ++f) {
    const int x = cat.dom(f), y = cat.cod(f);
    if (!cat.is_iso(f) && r.is_groupoid) {
      r.is_groupoid = false;
      r.groupoid_witness = Witness{f, f};
    }
    if (x != y) {
      if (cat.is_iso(f) && r.is_skeletal) {
        r.is_skeletal = false;
        r.skeletal_witness = Witness{f, cat.inverse(f)};
      }
      continue;
    }
    if (!cat.is_identity(f) && r.has_trivial_endomorphisms) {
      r.has_trivial_endomorphisms = false;
      r.trivial_endo_witness = Witness{f, f};
    }
    if (!cat.is_iso(f) && r.is_ei) {
      r.is_ei = false;
      r.ei_witness = Witness{f, f};
    }
    if (cat.compose(f, f) == f) {
      if (!cat.is_identity(f) && !r.has_nonidentity_idempotent) {
        r.has_nonidentity_idempotent = true;
        r.idempotent_witness = Witness{f, f};
      }
      bool splits = false;
      for (int z = 0; z < n && !splits; ++z) {
        for (int rr : cat.hom(x, z)) {
          for (int s : cat.hom(z, x)) {
            if (cat.compose(s, rr) == f && cat.compose(rr, s) == z) {
              splits = true;
              break;
            }
          }
          if (splits) break;
        }
      }
      if (!splits && r.is_cauchy_complete) {
        r.is_cauchy_complete = false;
        r.cauchy_complete_witness = Witness{f, f};
      }
    }
  }
  for (int u = 0; u < m && r.is_directly_finite; ++u) {
    const int x = cat.dom(u), y = cat.cod(u);
    for (int v : cat.hom(y, x)) {
      if (cat.compose(v, u) == x && cat.compose(u, v) != y) {
        r.is_directly_finite = false;
        r.directly_finite_witness = Witness{u, v};
        break;
      }
    }
  }
  for (int f = 0; f < m && r.is_free; ++f) {
    const int y = cat.cod(f);
    for (int a : cat.hom(y, y)) {
      if (a != y && cat.is_iso(a) && cat.compose(a, f) == f) {
        r.is_free = false;
        r.free_witness = Witness{a, f};
        break;
      }
    }
  }
  if (!r.is_groupoid) {
    r.is_connected_groupoid = false;
    r.connected_groupoid_witness = r.groupoid_witness;
  } else if (n > 0) {
    const auto classes = iso_classes(cat);
    if (classes.size() > 1) {
      r.is_connected_groupoid = false;
      r.connected_groupoid_witness = Witness{classes[0][0], classes[1][0]};
    }
  }
  return r;
}

std::vector<std::vector<int>> iso_classes(const FiniteCategory& cat) {
  const int n = static_cast<int>(cat.num_objects());
  UnionFind uf(cat.num_objects());
  for (int f = 0; f < static_cast<int>(cat.num_morphisms()); ++f) {
    if (cat.is_iso(f)) uf.unite(cat.dom(f), cat.cod(f));
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> validate_functor(const Functor& p) {
  std::vector<Violation> out;
  const auto& s = *p.source;
  const auto& t = *p.target;
  if (p.object_map.size() != s.num_objects() || p.morphism_map.size() != s.num_morphisms()) {
    out.push_back({"functor-shape", "object or morphism map has the wrong size"});
    return out;
  }
  for (int x : p.object_map) {
    if (x < 0 || static_cast<std::size_t>(x) >= t.num_objects()) {
      out.push_back({"functor-range", "object map value out of range"});
      return out;
    }
  }
  for (int f : p.morphism_map) {
    if (f < 0 || static_cast<std::size_t>(f) >= t.num_morphisms()) {
      out.push_back({"functor-range", "morphism map value out of range"});
      return out;
    }
  }
  for (int f = 0; f < static_cast<int>(s.num_morphisms()); ++f) {
    const int pf = p.morphism_map[f];
    if (t.dom(pf) != p.object_map[s.dom(f)] || t.cod(pf) != p.object_map[s.cod(f)]) {
      out.push_back({"functor-type", "image of " + s.morphism(f).name + " has wrong domain or codomain"});
    }
  }
  if (!out.empty()) return out;
  for (int x = 0; x < static_cast<int>(s.num_objects()); ++x) {
    if (p.morphism_map[x] != p.object_map[x]) {
      out.push_back({"functor-identity", "identity of " + s.object_name(x) + " not sent to an identity"});
    }
  }
  for (int f = 0; f < static_cast<int>(s.num_morphisms()); ++f) {
    for (int g : s.out(s.cod(f))) {
      if (p.morphism_map[s.compose(g, f)] != t.compose(p.morphism_map[g], p.morphism_map[f])) {
        out.push_back({"functor-composition",
                       "composition not preserved for (" + s.morphism(g).name + ", " + s.morphism(f).name + ")"});
      }
    }
  }
  return out;
}

namespace {

// Applies `check` to the image multiplicities of every map hom(x, y) -> hom(Fx, Fy).
template <class Check>
bool all_hom_maps(const Functor& p, Check&& check) {
  const auto& s = *p.source;
  const auto& t = *p.target;
  for (int x = 0; x < static_cast<int>(s.num_objects()); ++x) {
    for (int y = 0; y < static_cast<int>(s.num_objects()); ++y) {
      const auto& target = t.hom(p.object_map[x], p.object_map[y]);
      std::map<int, int> hits;
      for (int f : s.hom(x, y)) ++hits[p.morphism_map[f]];
      if (!check(target, hits)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_full(const Functor& p) {
  return all_hom_maps(p, [](const std::vector<int>& target, const std::map<int, int>& hits) {
    return hits.size() == target.size();
  });
}

bool is_faithful(const Functor& p) {
  return all_hom_maps(p, [](const std::vector<int>&, const std::map<int, int>& hits) {
    for (const auto& [f, c] : hits) {
      if (c > 1) return false;
    }
    return true;
  });
}

bool is_essentially_surjective(const Functor& p) {
  const auto& t = *p.target;
  std::vector<char> reached(t.num_objects(), 0);
  for (int x : p.object_map) reached[x] = 1;
  for (int b = 0; b < static_cast<int>(t.num_objects()); ++b) {
    if (reached[b]) continue;
    bool found = false;
    for (int x : p.object_map) {
      for (int f : t.hom(x, b)) {
        if (t.is_iso(f)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

SubcategoryResult full_subcategory(std::shared_ptr<const FiniteCategory> cat, const std::vector<int>& objects) {
  const auto& c = *cat;
  std::vector<int> new_index(c.num_objects(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] < 0 || static_cast<std::size_t>(objects[i]) >= c.num_objects() || new_index[objects[i]] >= 0) {
      throw std::invalid_argument("full_subcategory: invalid or repeated object");
    }
    new_index[objects[i]] = static_cast<int>(i);
    names.push_back(c.object_name(objects[i]));
  }
  std::vector<Morphism> morphs;
  std::vector<int> old_of;
  std::vector<int> new_of(c.num_morphisms(), -1);
  for (int x : objects) {
    new_of[x] = static_cast<int>(morphs.size());
    old_of.push_back(x);
    morphs.push_back({c.morphism(x).name, new_index[x], new_index[x]});
  }
  for (int f = 0; f < static_cast<int>(c.num_morphisms()); ++f) {
    if (c.is_identity(f) || new_index[c.dom(f)] < 0 || new_index[c.cod(f)] < 0) continue;
    new_of[f] = static_cast<int>(morphs.size());
    old_of.push_back(f);
    morphs.push_back({c.morphism(f).name, new_index[c.dom(f)], new_index[c.cod(f)]});
  }
  auto sub = std::make_shared<const FiniteCategory>(FiniteCategory::from_function(
      std::move(names), std::move(morphs), [&](int g, int f) { return new_of[c.compose(old_of[g], old_of[f])]; }));
  SubcategoryResult r;
  r.category = sub;
  r.inclusion.source = sub;
  r.inclusion.target = cat;
  r.inclusion.object_map = objects;
  r.inclusion.morphism_map = old_of;
  return r;
}

SubcategoryResult skeleton(std::shared_ptr<const FiniteCategory> cat) {
  std::vector<int> reps;
  for (const auto& cls : iso_classes(*cat)) reps.push_back(cls.front());
  return full_subcategory(std::move(cat), reps);
}

AutGroup automorphism_group(const FiniteCategory& cat, int x) {
  AutGroup a;
  a.element_of.assign(cat.num_morphisms(), -1);
  for (int f : cat.hom(x, x)) {
    if (!cat.is_iso(f)) continue;
    a.element_of[f] = static_cast<int>(a.morphisms.size());
    a.morphisms.push_back(f);
  }
  const std::size_t k = a.morphisms.size();
  std::vector<int> table(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(cat.morphism(a.morphisms[i]).name);
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = a.element_of[cat.compose(a.morphisms[i], a.morphisms[j])];
  }
  a.group = FiniteGroup(k, std::move(table), std::move(names));
  return a;
}

CoveringResult is_covering(const Functor& p) {
  const auto& s = *p.source;
  const auto& t = *p.target;
  if (!classify(s).is_connected_groupoid || !classify(t).is_connected_groupoid) {
    throw PreconditionError("is_covering requires connected groupoids");
  }
  CoveringResult r;
  if (!validate_functor(p).empty()) {
    r.reason = "not a functor";
    return r;
  }
  std::vector<std::size_t> fiber(t.num_objects(), 0);
  for (int x : p.object_map) ++fiber[x];
  for (std::size_t b = 0; b < t.num_objects(); ++b) {
    if (fiber[b] == 0) {
      r.reason = "not surjective on objects: nothing over " + t.object_name(static_cast<int>(b));
      return r;
    }
  }
  for (int e = 0; e < static_cast<int>(s.num_objects()); ++e) {
    const auto& star = s.out(e);
    const auto& target_star = t.out(p.object_map[e]);
    std::set<int> image;
    for (int f : star) image.insert(p.morphism_map[f]);
    if (image.size() != star.size() || image.size() != target_star.size()) {
      r.reason = "star of " + s.object_name(e) + " does not map bijectively";
      return r;
    }
  }
  for (std::size_t b = 1; b < fiber.size(); ++b) {
    if (fiber[b] != fiber[0]) {
      r.reason = "fibers have different sizes";
      return r;
    }
  }
  r.is_covering = true;
  r.sheets = fiber.empty() ? 0 : fiber[0];
  return r;
}

bool is_isofibration(const Functor& p) {
  const auto& s = *p.source;
  const auto& t = *p.target;
  for (int e = 0; e < static_cast<int>(s.num_objects()); ++e) {
    const int pe = p.object_map[e];
    for (int b = 0; b < static_cast<int>(t.num_objects()); ++b) {
      for (int g : t.hom(b, pe)) {
        if (!t.is_iso(g)) continue;
        bool lifted = false;
        for (int d = 0; d < static_cast<int>(s.num_objects()) && !lifted; ++d) {
          for (int f : s.hom(d, e)) {
            if (s.is_iso(f) && p.morphism_map[f] == g) {
              lifted = true;
              break;
            }
          }
        }
        if (!lifted) return false;
      }
    }
  }
  return true;
}

FiniteCategory fiber_category(const Functor& p, int b) {
  const auto& s = *p.source;
  std::vector<int> objs;
  std::vector<int> new_index(s.num_objects(), -1);
  std::vector<std::string> names;
  for (int e = 0; e < static_cast<int>(s.num_objects()); ++e) {
    if (p.object_map[e] != b) continue;
    new_index[e] = static_cast<int>(objs.size());
    objs.push_back(e);
    names.push_back(s.object_name(e));
  }
  std::vector<Morphism> morphs;
  std::vector<int> old_of;
  std::vector<int> new_of(s.num_morphisms(), -1);
  for (int e : objs) {
    new_of[e] = static_cast<int>(morphs.size());
    old_of.push_back(e);
    morphs.push_back({s.morphism(e).name, new_index[e], new_index[e]});
  }
  for (int f = 0; f < static_cast<int>(s.num_morphisms()); ++f) {
    if (s.is_identity(f) || p.morphism_map[f] != b || new_index[s.dom(f)] < 0) continue;
    new_of[f] = static_cast<int>(morphs.size());
    old_of.push_back(f);
    morphs.push_back({s.morphism(f).name, new_index[s.dom(f)], new_index[s.cod(f)]});
  }
  return FiniteCategory::from_function(std::move(names), std::move(morphs),
                                       [&](int g, int f) { return new_of[s.compose(old_of[g], old_of[f])]; });
}

}  // namespace eicat
