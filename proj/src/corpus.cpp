#include "eicat/corpus.hpp"

#include "eicat/constructions.hpp"
#include "eicat/group.hpp"

#include <map>
#include <stdexcept>

namespace eicat {

FiniteCategory span_category() {
  std::vector<std::vector<bool>> leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  return poset_category({"0", "1", "2"}, leq);
}

FiniteCategory parallel_pair() { return path_category({"a", "b"}, {{"f", 0, 1}, {"g", 0, 1}}); }

FiniteCategory subsets_category(std::size_t q) {
  if (q > 6) throw std::invalid_argument("subsets-q supports q <= 6");
  const std::size_t n = q + 1;
  std::vector<unsigned> sets;
  for (std::size_t size = 1; size <= n; ++size) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) == size) sets.push_back(mask);
    }
  }
  std::vector<std::string> names;
  for (unsigned s : sets) {
    std::string name = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (1u << i)) name += (name.size() > 1 ? "," : "") + std::to_string(i);
    }
    names.push_back(name + "}");
  }
  std::vector<std::vector<bool>> leq(sets.size(), std::vector<bool>(sets.size()));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (std::size_t k = 0; k < sets.size(); ++k) leq[j][k] = (sets[k] & ~sets[j]) == 0;
  }
  return poset_category(names, leq);
}

FiniteCategory divisor_poset(std::size_t n) {
  if (n == 0) throw std::invalid_argument("divisor poset of 0");
  std::vector<std::size_t> divs;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) divs.push_back(d);
  }
  std::vector<std::string> names;
  for (auto d : divs) names.push_back(std::to_string(d));
  std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = 0; j < divs.size(); ++j) leq[i][j] = divs[j] % divs[i] == 0;
  }
  return poset_category(names, leq);
}

FiniteCategory non_ei_pair() {
  // 0 id_x, 1 id_y, 2 u, 3 v, 4 vu, 5 uv
  std::vector<Morphism> morphs = {{"id_x", 0, 0}, {"id_y", 1, 1}, {"u", 0, 1},
                                  {"v", 1, 0},    {"vu", 0, 0},   {"uv", 1, 1}};
  // Words in u, v reduce to u, v, vu, uv or an identity.
  const std::map<std::pair<int, int>, int> table = {
      {{3, 2}, 4}, {{2, 3}, 5}, {{4, 4}, 4}, {{5, 5}, 5}, {{2, 4}, 2},
      {{4, 3}, 3}, {{3, 5}, 3}, {{5, 2}, 2},
  };
  return FiniteCategory::from_function({"x", "y"}, morphs, [&](int g, int f) {
    if (g < 2) return f;
    if (f < 2) return g;
    return table.at({g, f});
  });
}

FiniteCategory leinster_a() {
  std::vector<std::string> objects = {"a1", "a2", "a3", "a4"};
  std::vector<Morphism> morphs = {{"id_a1", 0, 0}, {"id_a2", 1, 1}, {"id_a3", 2, 2}, {"id_a4", 3, 3}};
  const std::vector<std::pair<std::string, std::pair<int, int>>> arrows = {
      {"f11", {0, 0}}, {"f12", {0, 1}}, {"g12", {0, 1}}, {"f13", {0, 2}}, {"f14", {0, 3}},
      {"f21", {1, 0}}, {"g21", {1, 0}}, {"f22", {1, 1}}, {"f23", {1, 2}}, {"f24", {1, 3}},
      {"g24", {1, 3}}, {"f31", {2, 0}}, {"f32", {2, 1}}, {"f34", {2, 3}},
  };
  std::map<std::pair<int, int>, int> f_of;  // (i, k) -> f_ik
  for (const auto& [name, ends] : arrows) {
    if (name[0] == 'f') f_of[ends] = static_cast<int>(morphs.size());
    morphs.push_back({name, ends.first, ends.second});
  }
  f_of[{2, 2}] = 2;
  return FiniteCategory::from_function(objects, morphs, [&](int g, int f) {
    if (g < 4) return f;
    if (f < 4) return g;
    return f_of.at({morphs[f].dom, morphs[g].cod});
  });
}

std::vector<CorpusEntry> corpus_entries() {
  return {
      {"span", "poset 1 <- 0 -> 2"},
      {"parallel-pair", "two parallel arrows a => b"},
      {"subsets-q", "nonempty subsets of {0..q}, arrow J -> K iff K is contained in J (option --q, default 2)"},
      {"non-ei-pair", "two objects with u: x -> y, v: y -> x, vuv = v, uvu = u; not EI"},
      {"leinster-A", "four-object category without a weighting"},
      {"biset-point-z2", "biset category for G = Z/2, H = 1, S a point"},
      {"biset-point-z3", "biset category for G = Z/3, H = 1, S a point"},
      {"biset-regular-z2", "biset category for G = Z/2 acting on itself, H = 1"},
      {"indiscrete-2", "two uniquely isomorphic objects"},
      {"delooping-z2", "one object with automorphism group Z/2"},
      {"delooping-z3", "one object with automorphism group Z/3"},
      {"delooping-s3", "one object with automorphism group S3"},
  };
}

FiniteCategory corpus_category(const std::string& name, std::optional<std::size_t> q) {
  if (name == "span") return span_category();
  if (name == "parallel-pair") return parallel_pair();
  if (name == "subsets-q") return subsets_category(q.value_or(2));
  if (name == "non-ei-pair") return non_ei_pair();
  if (name == "leinster-A") return leinster_a();
  if (name == "biset-point-z2") return biset_category(cyclic_group(2), trivial_group(), point_biset(cyclic_group(2), trivial_group()));
  if (name == "biset-point-z3") return biset_category(cyclic_group(3), trivial_group(), point_biset(cyclic_group(3), trivial_group()));
  if (name == "biset-regular-z2") return biset_category(cyclic_group(2), trivial_group(), regular_left_biset(cyclic_group(2)));
  if (name == "indiscrete-2") return indiscrete(2);
  if (name == "delooping-z2") return delooping(cyclic_group(2));
  if (name == "delooping-z3") return delooping(cyclic_group(3));
  if (name == "delooping-s3") return delooping(symmetric_group(3));
  throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace eicat
