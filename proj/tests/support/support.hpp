#pragma once

// Random generators and brute-force reference computations shared by the
// unit tests and the acceptance binary. Nothing here calls the library
// routine that a given oracle is meant to check.

#include "eicat/constructions.hpp"
#include "eicat/exactq.hpp"
#include "eicat/fincat.hpp"
#include "eicat/group.hpp"
#include "eicat/orbitcat.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace eicat::testing {

using Rng = std::mt19937_64;

// ---- groups ----

/// All subgroups by exhaustive subset search (|G| <= 20), ordered by
/// (size, elements).
std::vector<std::vector<int>> brute_subgroups(const FiniteGroup& g);

struct BruteClass {
  std::vector<int> rep;  // least conjugate
  std::size_t conjugates = 0;
  std::size_t weyl_order = 0;
};
/// Conjugacy classes of subgroups ordered by (size, least conjugate).
std::vector<BruteClass> brute_classes(const FiniteGroup& g);

/// #{gK : hgK = gK for all h in H} by listing cosets.
std::size_t brute_fixed_cosets(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& k);

/// Marks matrix over brute_classes: entry (H, K) = brute_fixed_cosets.
std::vector<std::vector<std::int64_t>> brute_marks(const FiniteGroup& g);

/// G/N for a normal subgroup N; element i of the result is the coset with
/// the i-th smallest least element. `project[g]` is the image of g.
struct Quotient {
  FiniteGroup group;
  std::vector<int> project;
};
Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal);

bool is_normal(const FiniteGroup& g, const std::vector<int>& h);

/// Left G-set: action[g][x] = g·x.
struct LeftGSet {
  std::size_t size = 0;
  std::vector<std::vector<int>> action;
};
/// Disjoint union of G/K over the given subgroups.
LeftGSet coset_union(const FiniteGroup& g, const std::vector<std::vector<int>>& subgroups);
std::size_t count_fixed(const LeftGSet& x, const std::vector<int>& h);

// ---- categories ----

/// X//G: objects the points, a morphism (g, x) : x -> g·x for each pair;
/// identities first, morphism names "g@x".
FiniteCategory action_groupoid(const FiniteGroup& g, const LeftGSet& x);

/// Category with objects P and mor(x, y) = {g : g·x <= y}.
FiniteCategory transport_category(const FiniteGroup& g, const LeftGSet& x,
                                  const std::vector<std::vector<bool>>& leq);

/// Random transport category of a small group acting on a random
/// G-invariant poset. EI and free, usually not skeletal.
FiniteCategory random_transport_category(Rng& rng);
/// Free category on a random DAG with at most `max_objects` objects.
FiniteCategory random_path_category(Rng& rng, int max_objects = 5);
/// Random poset on at most `max_objects` points.
FiniteCategory random_poset(Rng& rng, int max_objects = 6);
/// Mix of skeleta of transport categories, path categories and posets.
FiniteCategory random_free_skeletal_ei(Rng& rng);

/// Random small group from a fixed menu (order <= 8).
FiniteGroup random_small_group(Rng& rng);

struct RandomBiset {
  FiniteGroup g;
  FiniteGroup h;
  Biset s;
};
/// Disjoint union of (G x H)/L for random subgroups L, with g·(a,b)L·h =
/// (ga, h^-1 b)L.
RandomBiset random_biset(Rng& rng);

/// Functor given by morphism names; objects follow from the morphisms.
Functor functor_by_names(std::shared_ptr<const FiniteCategory> source, std::shared_ptr<const FiniteCategory> target,
                         const std::map<std::string, std::string>& morphism_names);

// ---- independent invariant computations ----

/// |G\S| and |G\S/H| by union-find on the biset.
std::size_t orbit_count_left(const FiniteGroup& g, const Biset& s);
std::size_t orbit_count_double(const FiniteGroup& g, const FiniteGroup& h, const Biset& s);
bool left_free(const FiniteGroup& g, const Biset& s);

/// Sum over objects of 1/|aut| over one object per iso class.
Rational groupoid_cardinality(const FiniteCategory& groupoid);

/// mu(x, y) = -sum_{x <= z < y} mu(x, z) for a reflexive transitive
/// antisymmetric relation.
std::vector<std::vector<BigInt>> recursive_moebius(const std::vector<std::vector<bool>>& leq);

/// Number-theoretic Moebius function.
int classical_mu(std::size_t n);

/// Alternating simplex count of the nerve of a finite poset-like category
/// with trivial endomorphisms: chains of non-identity composable arrows.
BigInt nerve_by_enumeration(const FiniteCategory& cat);

}  // namespace eicat::testing
