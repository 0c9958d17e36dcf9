#include "eicat/leinster.hpp"

#include "eicat/constructions.hpp"
#include "eicat/errors.hpp"

#include <stdexcept>

namespace eicat {

QMatrix zeta_matrix(const FiniteCategory& cat) {
  const std::size_t n = cat.num_objects();
  QMatrix z(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      z(x, y) = static_cast<long>(cat.hom(static_cast<int>(x), static_cast<int>(y)).size());
    }
  }
  z.set_labels(cat.objects());
  return z;
}

WeightingResult weighting(const FiniteCategory& cat) {
  const QMatrix z = zeta_matrix(cat);
  const QVector ones(std::vector<Rational>(cat.num_objects(), Rational(1)), cat.objects());
  SolutionReport s = solve_linear(z, ones);
  WeightingResult r;
  r.exists = s.consistent;
  r.kernel_dim = s.kernel_dim;
  r.kernel_basis = std::move(s.kernel_basis);
  if (s.solution) {
    if (!(z * *s.solution == ones)) throw InternalAssertion("weighting does not solve the zeta system");
    r.weighting = std::move(s.solution);
  }
  return r;
}

WeightingResult coweighting(const FiniteCategory& cat) { return weighting(opposite(cat)); }

std::optional<Rational> chi_L(const FiniteCategory& cat) {
  const WeightingResult w = weighting(cat);
  const WeightingResult c = coweighting(cat);
  if (!w.exists || !c.exists) return std::nullopt;
  const Rational sum = w.weighting->sum();
  if (sum != c.weighting->sum()) throw InternalAssertion("weighting and coweighting sums differ");
  for (const auto& basis : {w.kernel_basis, c.kernel_basis}) {
    for (const auto& v : basis) {
      if (!v.sum().is_zero()) throw InternalAssertion("weighting sum depends on the chosen solution");
    }
  }
  return sum;
}

std::optional<QMatrix> leinster_moebius(const FiniteCategory& cat) { return mat_invert(zeta_matrix(cat)); }

CellWeighting weighting_from_cells(const FiniteCategory& cat, const std::vector<Cell>& cells) {
  std::vector<Rational> k(cat.num_objects());
  for (const auto& cell : cells) {
    const auto x = cat.object_index(cell.base);
    if (!x) throw std::invalid_argument("cell based at unknown object '" + cell.base + "'");
    k[*x] += (cell.dim % 2 == 0) ? 1 : -1;
  }
  CellWeighting out;
  out.k = QVector(std::move(k), cat.objects());
  const QVector ones(std::vector<Rational>(cat.num_objects(), Rational(1)));
  out.verified = zeta_matrix(cat) * out.k == ones;
  return out;
}

}  // namespace eicat
