#pragma once

// Explicit finite categories: raw data, validation, the validated
// FiniteCategory type, classification predicates and functors.

#include "eicat/group.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eicat {

/// Unvalidated category description as read from JSON.
struct CategoryData {
  struct Arrow {
    std::string id;
    std::string dom;
    std::string cod;
  };
  struct Composite {
    std::string g;
    std::string f;
    std::string gf;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<Composite> composition;
};

struct Violation {
  std::string kind;     // e.g. "associativity", "identity", "missing-composite"
  std::string message;  // names the offending morphisms
};

std::vector<Violation> validate(const CategoryData& data);

struct Morphism {
  std::string name;
  int dom = 0;
  int cod = 0;
};

/// Validated finite category. Objects are 0..n-1 and morphism i < n is
/// the identity of object i; the remaining morphisms follow.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  /// Builds the composition table from `compose(g, f)`, which is called for
  /// every composable pair. `morphisms` must start with the identities in
  /// object order. No law is checked here; see validate().
  template <class ComposeFn>
  static FiniteCategory from_function(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                      ComposeFn&& compose) {
    FiniteCategory c;
    c.init(std::move(objects), std::move(morphisms));
    for (std::size_t f = 0; f < c.morphisms_.size(); ++f) {
      const int y = c.morphisms_[f].cod;
      auto& row = c.composite_[f];
      row.resize(c.out_[y].size());
      for (std::size_t k = 0; k < c.out_[y].size(); ++k) row[k] = compose(c.out_[y][k], static_cast<int>(f));
    }
    c.compute_inverses();
    return c;
  }

  /// Throws PreconditionError listing the violations when `data` is invalid.
  static FiniteCategory from_data(const CategoryData& data);
  CategoryData to_data() const;

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(int x) const { return objects_[x]; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int dom(int f) const { return morphisms_[f].dom; }
  int cod(int f) const { return morphisms_[f].cod; }
  int identity(int x) const { return x; }
  bool is_identity(int f) const { return static_cast<std::size_t>(f) < objects_.size(); }

  /// g ∘ f; requires cod(f) == dom(g).
  int compose(int g, int f) const { return composite_[f][out_pos_[g]]; }
  /// g ∘ f, or -1 when the pair is not composable.
  int try_compose(int g, int f) const { return cod(f) == dom(g) ? compose(g, f) : -1; }

  /// Morphisms x -> y in id order.
  const std::vector<int>& hom(int x, int y) const { return hom_[static_cast<std::size_t>(x) * objects_.size() + y]; }
  /// Morphisms with domain x.
  const std::vector<int>& out(int x) const { return out_[x]; }

  /// Two-sided inverse of f, or -1.
  int inverse(int f) const { return inverse_[f]; }
  bool is_iso(int f) const { return inverse_[f] >= 0; }

  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> morphism_index(const std::string& name) const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

 private:
  void init(std::vector<std::string> objects, std::vector<Morphism> morphisms);
  void compute_inverses();

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> out_;
  std::vector<int> out_pos_;
  std::vector<std::vector<int>> composite_;
  std::vector<int> inverse_;
};

/// Checks identity laws, associativity, and dom/cod of composites.
std::vector<Violation> validate(const FiniteCategory& cat);

struct Witness {
  int first = -1;
  int second = -1;
};

struct PredicateReport {
  bool is_ei = true;
  bool is_directly_finite = true;
  bool is_cauchy_complete = true;
  bool is_free = true;
  bool is_skeletal = true;
  bool is_groupoid = true;
  bool is_connected_groupoid = true;
  bool has_trivial_endomorphisms = true;
  bool has_nonidentity_idempotent = false;

  std::optional<Witness> ei_witness;                  // non-invertible endomorphism
  std::optional<Witness> directly_finite_witness;     // (u, v) with v∘u = id, u∘v != id
  std::optional<Witness> cauchy_complete_witness;     // non-split idempotent
  std::optional<Witness> free_witness;                // (a, f) with a∘f = f, a != id
  std::optional<Witness> skeletal_witness;            // iso between distinct objects
  std::optional<Witness> groupoid_witness;            // non-invertible morphism
  std::optional<Witness> connected_groupoid_witness;  // non-invertible morphism, or identities of two unconnected objects
  std::optional<Witness> trivial_endo_witness;        // nonidentity endomorphism
  std::optional<Witness> idempotent_witness;          // nonidentity idempotent
};

PredicateReport classify(const FiniteCategory& cat);

/// Partition of the objects by isomorphism, each class sorted, classes
/// ordered by least member.
std::vector<std::vector<int>> iso_classes(const FiniteCategory& cat);

struct Functor {
  std::shared_ptr<const FiniteCategory> source;
  std::shared_ptr<const FiniteCategory> target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

/// Empty when the maps preserve dom/cod, identities and composition.
std::vector<Violation> validate_functor(const Functor& p);
bool is_full(const Functor& p);
bool is_faithful(const Functor& p);
bool is_essentially_surjective(const Functor& p);

struct SubcategoryResult {
  std::shared_ptr<const FiniteCategory> category;
  Functor inclusion;
};

/// Full subcategory on `objects` (in the given order).
SubcategoryResult full_subcategory(std::shared_ptr<const FiniteCategory> cat, const std::vector<int>& objects);

/// Full subcategory on the least object of each iso class.
SubcategoryResult skeleton(std::shared_ptr<const FiniteCategory> cat);

struct AutGroup {
  FiniteGroup group;
  std::vector<int> morphisms;  // element i is morphisms[i]; element 0 is the identity
  std::vector<int> element_of; // morphism id -> element, -1 outside aut(x)
};

/// aut(x) with multiplication a·b = a∘b.
AutGroup automorphism_group(const FiniteCategory& cat, int x);

struct CoveringResult {
  bool is_covering = false;
  std::size_t sheets = 0;
  std::string reason;
};

/// Requires source and target to be connected groupoids (PreconditionError
/// otherwise). Checks surjectivity on objects, the star bijection at every
/// object and constancy of the fiber size.
CoveringResult is_covering(const Functor& p);

/// Every isomorphism g: b -> p(e) lifts to an isomorphism f with cod f = e.
bool is_isofibration(const Functor& p);

/// Objects over b and morphisms over id_b.
FiniteCategory fiber_category(const Functor& p, int b);

}  // namespace eicat
