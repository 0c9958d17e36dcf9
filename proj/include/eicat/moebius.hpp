#pragma once

// Chains of isomorphism classes, fiber-product bisets along chains and
// the rational/integral Moebius matrices and Euler characteristics of
// finite EI-categories.

#include "eicat/exactq.hpp"
#include "eicat/fincat.hpp"
#include "eicat/group.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eicat {

/// Isomorphism classes of an EI-category ordered by (length, least object).
struct IsoPoset {
  std::vector<int> reps;                  // least object of each class
  std::vector<std::vector<int>> members;  // objects of each class
  std::vector<int> class_of;              // object -> class
  std::vector<std::size_t> length;        // longest strict chain below the class
  std::vector<std::vector<bool>> leq;     // leq[i][j] iff mor(rep i, rep j) nonempty
  std::vector<std::string> labels;        // object names of the representatives
  std::vector<AutGroup> aut;              // automorphism group of each representative

  std::size_t size() const { return reps.size(); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
  /// Throws std::invalid_argument for an unknown label.
  std::size_t index_of(const std::string& label) const;
};

/// Throws PreconditionError when `cat` is not EI.
IsoPoset iso_order(const FiniteCategory& cat);

/// Strictly increasing sequence of class indices.
using Chain = std::vector<std::size_t>;

/// All chains bottom = x_0 < ... < x_l = top.
std::vector<Chain> enumerate_chains(const IsoPoset& p, std::size_t bottom, std::size_t top, std::size_t l);
std::vector<Chain> enumerate_chains(const IsoPoset& p, const std::string& bottom, const std::string& top,
                                    std::size_t l);

/// S(c) for a chain c: classes of composable tuples (f_l, ..., f_1),
/// f_i : x_{i-1} -> x_i, modulo moving automorphisms across interior
/// objects. Each class is represented by its lexicographically least tuple.
struct ChainBiset {
  std::vector<std::vector<int>> elements;  // representative tuples, f_l first
  std::vector<std::vector<int>> left;      // left[a][s]: a in aut(x_l) acting by post-composition
  std::vector<std::vector<int>> right;     // right[s][b]: b in aut(x_0) acting by pre-composition
  std::size_t size() const { return elements.size(); }
};

ChainBiset chain_biset(const FiniteCategory& cat, const IsoPoset& p, const Chain& c);

/// Sum over orbits of 1/|stabilizer|; asserts equality with |T|/|G|.
Rational perm_module_dim(const RightGSet& t, const FiniteGroup& g);

/// |aut(x_l) \ S(c) / aut(x_0)|.
std::size_t double_coset_count(const ChainBiset& b);
/// |aut(x_l) \ S(c)|.
std::size_t left_orbit_count(const ChainBiset& b);

/// Entry (row y, column x) = |mor(y,x)| / |aut(y)| over class representatives.
QMatrix omega_bar2(const FiniteCategory& cat);
QMatrix omega_bar2(const FiniteCategory& cat, const IsoPoset& p);

struct ChainOptions {
  /// Chains longer than this are skipped; nullopt means no limit.
  std::optional<std::size_t> max_chain_length;
};

/// Entry (y, x) = sum over l of (-1)^l sum over c in ch_l(y,x) of |S(c)|/|aut(y)|.
QMatrix mu_bar2_chains(const FiniteCategory& cat, const ChainOptions& opts = {});

struct IntegralMoebius {
  QMatrix a;  // a(x, y) = |mor(y, x)|
  QMatrix b;  // b(x, y) = sum over l of (-1)^l #(l-paths y -> x of non-identity morphisms)
};

/// Requires a skeletal category with trivial endomorphisms. Rows and
/// columns follow object order.
IntegralMoebius integral_moebius(const FiniteCategory& cat);

struct NerveEuler {
  std::optional<BigInt> value;
  std::string note;  // reason for absence, or how the value was obtained
};

/// Alternating count of nondegenerate simplices. Needs trivial
/// endomorphisms; a non-skeletal category is replaced by its skeleton.
NerveEuler nerve_euler_characteristic(const FiniteCategory& cat);

struct EulerReport {
  QVector chi_f;
  Rational chi;
  QVector chi_f2;
  Rational chi2;
  std::optional<BigInt> chi_nerve;
  QMatrix mu_bar2;
  std::vector<std::string> warnings;
};

/// Requires EI (PreconditionError otherwise).
EulerReport euler_characteristics(const FiniteCategory& cat, const ChainOptions& opts = {});

/// mu_bar2 * eta with eta_x = 1/|aut(x)|. Requires EI and free.
QVector chi_f2_via_eta(const FiniteCategory& cat);

}  // namespace eicat
