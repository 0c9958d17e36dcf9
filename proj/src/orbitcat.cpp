#include "eicat/orbitcat.hpp"

#include "eicat/moebius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace eicat {

namespace {

// least[g] = least element of the coset gK.
std::vector<int> coset_least(const FiniteGroup& g, const Subgroup& k) {
  std::vector<int> least(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    int m = static_cast<int>(x);
    for (int e : k) m = std::min(m, g.mul(static_cast<int>(x), e));
    least[x] = m;
  }
  return least;
}

bool fixes(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, int x) {
  const Subgroup c = conjugate(g, h, x);
  return std::includes(k.begin(), k.end(), c.begin(), c.end());
}

}  // namespace

OrbitCategory orbit_category(const FiniteGroup& g, std::size_t cap) {
  OrbitCategory orb;
  orb.group = g;
  orb.classes = subgroup_classes(g, cap);
  const std::size_t n = orb.classes.size();
  std::vector<std::vector<int>> least(n);
  for (std::size_t j = 0; j < n; ++j) least[j] = coset_least(g, orb.classes[j].representative);
  const auto labels = class_labels(n);
  std::vector<Morphism> morphs;
  // (i, j, least element) -> morphism id
  std::map<std::tuple<int, int, int>, int> index;
  auto add = [&](int i, int j, int x) {
    index[{i, j, x}] = static_cast<int>(morphs.size());
    orb.coset_element.push_back(x);
    morphs.push_back({"R(" + g.names()[x] + "):" + labels[i] + "->" + labels[j], i, j});
  };
  for (std::size_t i = 0; i < n; ++i) add(static_cast<int>(i), static_cast<int>(i), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& h = orb.classes[i].representative;
      const auto& k = orb.classes[j].representative;
      if (k.size() % h.size() != 0) continue;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (least[j][x] != static_cast<int>(x)) continue;
        if (i == j && x == 0) continue;
        if (fixes(g, h, k, static_cast<int>(x))) add(static_cast<int>(i), static_cast<int>(j), static_cast<int>(x));
      }
    }
  }
  const auto& mm = morphs;
  orb.category = FiniteCategory::from_function(labels, morphs, [&](int r2, int r1) {
    // R_{g2} ∘ R_{g1} = R_{g1 g2}
    const int i = mm[r1].dom, k = mm[r2].cod;
    const int prod = g.mul(orb.coset_element[r1], orb.coset_element[r2]);
    auto it = index.find({i, k, least[k][prod]});
    return it == index.end() ? -1 : it->second;
  });
  return orb;
}

int orbit_morphism(const OrbitCategory& orb, int i, int j, int g) {
  const auto& k = orb.classes[j].representative;
  int least = g;
  for (int e : k) least = std::min(least, orb.group.mul(g, e));
  for (int f : orb.category.hom(i, j)) {
    if (orb.coset_element[f] == least) return f;
  }
  return -1;
}

QVector chi_G(const GCWComplex& x) {
  std::vector<Rational> v(x.classes.size());
  for (const auto& c : x.cells) {
    if (c.stabilizer >= x.classes.size()) throw std::invalid_argument("cell stabilizer class out of range");
    v[c.stabilizer] += (c.dim % 2 == 0) ? 1 : -1;
  }
  return QVector(std::move(v), class_labels(x.classes.size()));
}

BigInt fixed_point_euler(const GCWComplex& x, std::size_t h) {
  if (h >= x.classes.size()) throw std::invalid_argument("subgroup class out of range");
  BigInt total = 0;
  for (const auto& c : x.cells) {
    const long count = static_cast<long>(
        fixed_point_count(x.group, x.classes[h].representative, x.classes[c.stabilizer].representative));
    total += (c.dim % 2 == 0) ? count : -count;
  }
  return total;
}

QMatrix reorder_square(const QMatrix& m, const std::vector<std::string>& labels) {
  std::vector<std::size_t> rows, cols;
  for (const auto& l : labels) {
    auto r = std::find(m.row_labels().begin(), m.row_labels().end(), l);
    auto c = std::find(m.col_labels().begin(), m.col_labels().end(), l);
    if (r == m.row_labels().end() || c == m.col_labels().end()) throw std::invalid_argument("unknown label " + l);
    rows.push_back(static_cast<std::size_t>(r - m.row_labels().begin()));
    cols.push_back(static_cast<std::size_t>(c - m.col_labels().begin()));
  }
  return m.permuted(rows, cols);
}

OmegaRelation verify_omega_relation(const GCWComplex& x) {
  const OrbitCategory orb = orbit_category(x.group, x.group.order());
  const auto labels = class_labels(x.classes.size());
  const QMatrix w = reorder_square(omega_bar2(orb.category), labels);
  OmegaRelation out;
  out.lhs = w * chi_G(x);
  std::vector<Rational> rhs;
  for (std::size_t h = 0; h < x.classes.size(); ++h) {
    rhs.push_back(Rational(fixed_point_euler(x, h)) / Rational(static_cast<long>(x.classes[h].weyl_order)));
  }
  out.rhs = QVector(std::move(rhs), labels);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace eicat
