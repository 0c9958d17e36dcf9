#include "eicat/burnside.hpp"

#include "eicat/errors.hpp"
#include "eicat/moebius.hpp"
#include "eicat/orbitcat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eicat {

QMatrix nu_matrix(const FiniteGroup& g, std::size_t cap) {
  const OrbitCategory orb = orbit_category(g, cap);
  const std::size_t n = orb.classes.size();
  const auto labels = class_labels(n);
  const QMatrix mu = reorder_square(mu_bar2_chains(orb.category), labels);
  QMatrix nu(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      nu(r, c) = mu(r, c) * Rational(static_cast<long>(orb.classes[r].weyl_order)) /
                 Rational(static_cast<long>(orb.classes[c].weyl_order));
    }
  }
  if (!nu.is_integral()) throw InternalAssertion("nu-matrix has a non-integral entry");
  nu.set_labels(labels);
  return nu;
}

QMatrix nu_matrix_explicit(const FiniteGroup& g, std::size_t cap) {
  const auto classes = subgroup_classes(g, cap);
  const std::size_t n = classes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      below[i][j] = i != j && is_subconjugate(g, classes[i].representative, classes[j].representative);
    }
  }
  // orbit_count[i][j] = number of N_G(H_j)-orbits, acting by right
  // multiplication, on the cosets x H_j with x^-1 H_i x in H_j.
  std::vector<std::vector<long>> orbit_count(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      const auto& h = classes[i].representative;
      const auto& k = classes[j].representative;
      std::set<std::vector<int>> fixed;
      for (const auto& coset : left_cosets(g, k)) {
        const Subgroup c = conjugate(g, h, coset.front());
        if (std::includes(k.begin(), k.end(), c.begin(), c.end())) fixed.insert(coset);
      }
      std::set<std::vector<int>> seen;
      for (const auto& coset : fixed) {
        if (seen.count(coset)) continue;
        ++orbit_count[i][j];
        for (int m : classes[j].normalizer) {
          std::vector<int> moved;
          for (int e : coset) moved.push_back(g.mul(e, m));
          std::sort(moved.begin(), moved.end());
          seen.insert(std::move(moved));
        }
      }
    }
  }
  QMatrix nu(n, n);
  for (std::size_t bottom = 0; bottom < n; ++bottom) {
    std::vector<std::size_t> chain{bottom};
    auto dfs = [&](auto&& self, BigInt product) -> void {
      const std::size_t last = chain.back();
      const long sign = (chain.size() % 2 == 1) ? 1 : -1;
      nu(bottom, last) += Rational(product) * Rational(sign);
      for (std::size_t next = 0; next < n; ++next) {
        if (!below[last][next]) continue;
        chain.push_back(next);
        self(self, product * orbit_count[last][next]);
        chain.pop_back();
      }
    };
    dfs(dfs, BigInt(1));
  }
  nu.set_labels(class_labels(n));
  return nu;
}

bool burnside_check(const FiniteGroup& g, const std::vector<BigInt>& xi) {
  const auto classes = subgroup_classes(g, g.order());
  if (xi.size() != classes.size()) {
    throw std::invalid_argument("xi has length " + std::to_string(xi.size()) + ", expected " +
                                std::to_string(classes.size()));
  }
  const QMatrix nu = nu_matrix(g, g.order());
  for (std::size_t r = 0; r < classes.size(); ++r) {
    BigInt sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) sum += nu(r, c).numerator() * xi[c];
    const BigInt w = static_cast<unsigned long>(classes[r].weyl_order);
    if (sum % w != 0) return false;
  }
  return true;
}

BurnsideCongruences::BurnsideCongruences(const FiniteGroup& g, std::size_t cap) {
  const auto classes = subgroup_classes(g, cap);
  nu_ = nu_matrix(g, cap);
  const std::size_t n = classes.size();
  rows_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto w = static_cast<std::int64_t>(classes[r].weyl_order);
    moduli_.push_back(w);
    if (w == 1) continue;
    for (std::size_t c = 0; c < n; ++c) {
      const BigInt e = nu_(r, c).numerator();
      BigInt reduced = e % BigInt(static_cast<long>(w));
      if (reduced < 0) reduced += w;
      if (reduced != 0) rows_[r].emplace_back(c, reduced.get_si());
    }
  }
}

bool BurnsideCongruences::holds(const std::vector<std::int64_t>& xi) const {
  if (xi.size() != moduli_.size()) throw std::invalid_argument("xi has the wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) continue;
    std::int64_t sum = 0;
    for (const auto& [c, e] : rows_[r]) sum += e * xi[c];
    if (sum % moduli_[r] != 0) return false;
  }
  return true;
}

}  // namespace eicat
