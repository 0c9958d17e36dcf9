#pragma once

// Named example categories shipped with the command line tool.

#include "eicat/fincat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eicat {

/// Poset 1 <- 0 -> 2.
FiniteCategory span_category();
/// Two parallel arrows f, g : a -> b.
FiniteCategory parallel_pair();
/// Nonempty subsets J of {0, ..., q} with one arrow J -> K iff K ⊆ J.
FiniteCategory subsets_category(std::size_t q);
/// Divisors of n with one arrow d -> e iff d divides e.
FiniteCategory divisor_poset(std::size_t n);
/// Objects x, y; u : x -> y, v : y -> x with v∘u∘v = v and u∘v∘u = u.
FiniteCategory non_ei_pair();
/// Four objects a1..a4; composite of non-identity p : ai -> aj and
/// q : aj -> ak is f_ik, where f_33 is the identity of a3.
FiniteCategory leinster_a();

struct CorpusEntry {
  std::string name;
  std::string description;
};

std::vector<CorpusEntry> corpus_entries();

/// Throws std::invalid_argument for an unknown name. `q` is used by
/// "subsets-q" (default 2) and ignored otherwise.
FiniteCategory corpus_category(const std::string& name, std::optional<std::size_t> q = std::nullopt);

}  // namespace eicat
