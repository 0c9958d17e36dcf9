#pragma once

// Finite groups given by Cayley tables, subgroup lattices and the
// conjugacy data needed for orbit categories and tables of marks.

#include "eicat/exactq.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eicat {

inline constexpr std::size_t kDefaultGroupCap = 200;

/// Group on elements 0..n-1 with element 0 the identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}) {}
  /// Validates the table; throws std::invalid_argument if it is not a group
  /// with identity 0.
  FiniteGroup(std::size_t order, std::vector<int> table, std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the n-gon, order 2n. Element k + n*e is r^k s^e.
FiniteGroup dihedral_group(std::size_t n);
/// n <= 5.
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
/// Element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Closure of the given permutations of {0..degree-1} under composition,
/// (a*b)(i) = a(b(i)). Identity first, remaining elements sorted
/// lexicographically as images. Throws when the closure exceeds `cap`.
FiniteGroup group_from_permutations(std::size_t degree,
                                    const std::vector<std::vector<int>>& generators,
                                    std::size_t cap = kDefaultGroupCap);

/// Parses "trivial", "cyclic:n", "dihedral:n", "sym:n", "alt:n" and
/// products of these joined by 'x', e.g. "cyclic:2xcyclic:2".
FiniteGroup build_group(std::string_view spec, std::size_t cap = kDefaultGroupCap);

/// Sorted element list.
using Subgroup = std::vector<int>;

/// All subgroups, sorted by (size, element list).
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

/// Subgroup generated by `gens`.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x);  // x^-1 H x
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
/// True if some conjugate x^-1 H x is contained in K.
bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

struct SubgroupClass {
  Subgroup representative;  // least conjugate in lexicographic order
  std::vector<Subgroup> conjugates;
  Subgroup normalizer;
  std::size_t weyl_order = 0;
};

/// Conjugacy classes of subgroups ordered by ascending |H|, ties by
/// representative.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, std::size_t cap = kDefaultGroupCap);

/// Index of the class containing `h`; throws if `h` is not a subgroup.
std::size_t class_index(const FiniteGroup& g, const std::vector<SubgroupClass>& classes,
                        const std::vector<int>& h);

/// Labels "c0", "c1", ... in class order.
std::vector<std::string> class_labels(std::size_t count);

/// N_G(H)/H with cosets labeled by their least element; coset i of the
/// result corresponds to the i-th smallest least element.
struct WeylGroup {
  FiniteGroup group;
  std::vector<int> coset_reps;  // least element of each coset
};
WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h);

/// Left cosets gK as sorted element lists, ordered by least element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& k);

/// |(G/K)^H| = #{gK : g^-1 H g ⊆ K}.
std::size_t fixed_point_count(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// ch with entry (row (H), column (K)) = |(G/K)^H| in class order.
QMatrix table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes);
QMatrix table_of_marks(const FiniteGroup& g);

/// A right action of a group on {0..size-1}: action[g][t] = t·g.
struct RightGSet {
  std::size_t size = 0;
  std::vector<std::vector<int>> action;
};

/// Throws std::invalid_argument unless `t` is a right action of `g`.
void validate_right_action(const FiniteGroup& g, const RightGSet& t);

/// Orbits of a right action, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(const RightGSet& t);

}  // namespace eicat
