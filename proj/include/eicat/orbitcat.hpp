#pragma once

// Orbit categories of finite groups and equivariant Euler characteristics
// of finite G-CW cell censuses.

#include "eicat/exactq.hpp"
#include "eicat/fincat.hpp"
#include "eicat/group.hpp"

#include <cstddef>
#include <vector>

namespace eicat {

/// Skeletal orbit category: object i is G/H_i for the representative H_i
/// of subgroup class i. A morphism G/H -> G/K is R_g : xH -> xgK for a
/// coset gK with g^-1 H g ⊆ K, recorded by the least element of gK.
struct OrbitCategory {
  FiniteGroup group;
  std::vector<SubgroupClass> classes;
  FiniteCategory category;
  std::vector<int> coset_element;  // morphism -> least element g of gK
};

OrbitCategory orbit_category(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

/// Morphism R_g : G/H_i -> G/H_j, or -1 when g^-1 H_i g is not in H_j.
int orbit_morphism(const OrbitCategory& orb, int i, int j, int g);

struct GCell {
  std::size_t dim = 0;
  std::size_t stabilizer = 0;  // subgroup class index
};

struct GCWComplex {
  FiniteGroup group;
  std::vector<SubgroupClass> classes;
  std::vector<GCell> cells;
};

/// Signed cell census over subgroup classes.
QVector chi_G(const GCWComplex& x);

/// Euler characteristic of X^H for H the representative of class h:
/// each cell G/K x D^n contributes (-1)^n |(G/K)^H|.
BigInt fixed_point_euler(const GCWComplex& x, std::size_t h);

struct OmegaRelation {
  bool holds = false;
  QVector lhs;  // omega_bar2(Or(G)) * chi_G(X), class order
  QVector rhs;  // chi(X^H) / |W_G H|
};

OmegaRelation verify_omega_relation(const GCWComplex& x);

/// Matrix with rows and columns permuted so that both follow `labels`.
QMatrix reorder_square(const QMatrix& m, const std::vector<std::string>& labels);

}  // namespace eicat
