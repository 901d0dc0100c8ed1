#pragma once

#include <cstdint>

#include "dcc/cayley.hpp"
#include "dcc/perm.hpp"

namespace dcc {

inline constexpr int kDefaultAutDegreeCap = 256;

// true iff p preserves adjacency (arcs, in directed mode); loops included
bool is_automorphism(const CayleyGraph& g, const Permutation& p);

// Full automorphism group by individualization-refinement backtracking with
// orbit pruning. Deterministic: the generator list only depends on the graph.
PermGroup automorphism_group(const CayleyGraph& g, int degree_cap = kDefaultAutDegreeCap);

// Validation oracle: filters all n! permutations through the adjacency
// predicate. n <= 10.
PermGroup brute_force_aut(const CayleyGraph& g);

// raw number of adjacency-preserving permutations, same n <= 10 limit
std::uint64_t brute_force_aut_count(const CayleyGraph& g);

}  // namespace dcc
