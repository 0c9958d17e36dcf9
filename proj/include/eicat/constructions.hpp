#pragma once

#include "eicat/fincat.hpp"
#include "eicat/group.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eicat {

/// Same object and morphism names, dom and cod swapped.
FiniteCategory opposite(const FiniteCategory& cat);

/// Objects "(a,b)" with a-major order; morphisms "(f,g)".
FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b);

/// Objects and morphisms of `a` prefixed "0.", those of `b` prefixed "1.";
/// objects of `a` come first.
FiniteCategory coproduct(const FiniteCategory& a, const FiniteCategory& b);

/// One object "*", morphisms the group elements, g∘f = g·f.
FiniteCategory delooping(const FiniteGroup& g);

/// Category of a preorder on `names`: one morphism x -> y iff leq[x][y].
/// The relation must be reflexive and transitive.
FiniteCategory poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq);

/// Free category on a directed acyclic multigraph. Edges are
/// (name, source, target); paths are named by their edges joined with '.',
/// last edge first.
struct Edge {
  std::string name;
  int source = 0;
  int target = 0;
};
FiniteCategory path_category(const std::vector<std::string>& objects, const std::vector<Edge>& edges);

/// One morphism between any two of n objects "0".."n-1".
FiniteCategory indiscrete(std::size_t n);

/// A finite G-H-biset: left[g][s] = g·s, right[s][h] = s·h.
struct Biset {
  std::size_t size = 0;
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;
};

/// Throws PreconditionError unless both are actions and they commute.
void validate_biset(const FiniteGroup& g, const FiniteGroup& h, const Biset& s);

/// Objects x, y with mor(x,x) = H, mor(y,y) = G, mor(x,y) = S, mor(y,x) empty.
FiniteCategory biset_category(const FiniteGroup& g, const FiniteGroup& h, const Biset& s);

/// |G\S| and |G\S/H|.
std::size_t left_orbit_count(const FiniteGroup& g, const Biset& s);
std::size_t double_orbit_count(const FiniteGroup& g, const FiniteGroup& h, const Biset& s);
bool left_action_is_free(const FiniteGroup& g, const Biset& s);

/// G acting on itself from the left, H trivial acting on the right.
Biset regular_left_biset(const FiniteGroup& g);
/// One point, both groups acting trivially.
Biset point_biset(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace eicat
