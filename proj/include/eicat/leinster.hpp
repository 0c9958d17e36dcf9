#pragma once

// Weightings, coweightings and Leinster's Euler characteristic.

#include "eicat/exactq.hpp"
#include "eicat/fincat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eicat {

/// Entry (x, y) = |mor(x, y)| in object order.
QMatrix zeta_matrix(const FiniteCategory& cat);

struct WeightingResult {
  bool exists = false;
  std::optional<QVector> weighting;  // free variables set to zero
  std::size_t kernel_dim = 0;
  std::vector<QVector> kernel_basis;
};

/// Solves sum_y |mor(x, y)| k^y = 1 for all x.
WeightingResult weighting(const FiniteCategory& cat);
/// Weighting of the opposite category.
WeightingResult coweighting(const FiniteCategory& cat);

/// Sum of a weighting, defined when both a weighting and a coweighting
/// exist. Asserts that the two sums agree and that another solution in
/// the affine solution space gives the same sum.
std::optional<Rational> chi_L(const FiniteCategory& cat);

/// Inverse of the zeta matrix, when it exists.
std::optional<QMatrix> leinster_moebius(const FiniteCategory& cat);

struct Cell {
  std::size_t dim = 0;
  std::string base;  // object name
};

struct CellWeighting {
  QVector k;
  bool verified = false;  // zeta * k = (1, ..., 1)
};

/// k^y = sum over cells based at y of (-1)^dim. Throws
/// std::invalid_argument for an unknown base object.
CellWeighting weighting_from_cells(const FiniteCategory& cat, const std::vector<Cell>& cells);

}  // namespace eicat
