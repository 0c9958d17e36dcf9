#pragma once

// The nu-matrix of a finite group and the Burnside ring congruences.

#include "eicat/exactq.hpp"
#include "eicat/group.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eicat {

/// D * mu_bar2(Or(G)) * D^-1 in subgroup class order, D = diag(|W_G H|).
/// Throws InternalAssertion if an entry is not an integer.
QMatrix nu_matrix(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

/// Entry (K, H) = sum over chains (K) = (H_0) < ... < (H_l) = (H) of
/// (-1)^l prod_i |W_G H_{i+1} \ map_G(G/H_i, G/H_{i+1})|, computed from
/// subconjugacy and coset orbits alone.
QMatrix nu_matrix_explicit(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

/// (nu xi)_(H) = 0 mod |W_G H| for every class. Throws
/// std::invalid_argument when xi has the wrong length.
bool burnside_check(const FiniteGroup& g, const std::vector<BigInt>& xi);

/// Precomputed congruences for repeated checks with machine integers.
class BurnsideCongruences {
 public:
  explicit BurnsideCongruences(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

  std::size_t size() const { return moduli_.size(); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  const QMatrix& nu() const { return nu_; }

  bool holds(const std::vector<std::int64_t>& xi) const;

 private:
  QMatrix nu_;
  std::vector<std::int64_t> moduli_;
  // Per row with modulus > 1: (column, entry reduced mod modulus), nonzero only.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows_;
};

}  // namespace eicat
