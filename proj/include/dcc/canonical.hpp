#pragma once

#include <string>
#include <vector>

#include "dcc/dicyclic.hpp"
#include "dcc/perm.hpp"

namespace dcc {

// right translation u -> u*t as a permutation of the element enumeration
Permutation translation(const DicyclicGroup& g, const DicyclicElement& t);

// right regular action: degree n, order n, transitive, trivial stabilisers
PermGroup regular_representation(const DicyclicGroup& g);

enum class BKind { Generic, Q8E };

// The canonical automorphism group every Cayley graph on the group admits:
//   generic:  B = <regular R, iota>, order 2n
//   q8e:      B = <regular R, alpha_i, alpha_j, alpha_k>, order 8n,
// where the alphas act on the element coordinates as
//   alpha_i swaps (a,0) <-> (ay,0) for a^2 = y,
//   alpha_j swaps (a,1) <-> (ay,1) for a^2 = 1,
//   alpha_k swaps (a,1) <-> (ay,1) for a^2 = y,
// everything else fixed. Under the usual labelling of Q8 x C2^l (i the
// order-4 generator of the C4 part, j the element (identity, 1), k = i*j,
// -1 = y) these are exactly the maps i*e <-> -i*e, j*e <-> -j*e,
// k*e <-> -k*e with all other elements fixed.
struct CanonicalB {
    BKind kind = BKind::Generic;
    PermGroup group;
    std::vector<Permutation> regular_gens;
    Permutation iota;
    std::vector<Permutation> alphas;  // q8e: {alpha_i, alpha_j, alpha_k}, else empty
    long long m_orbit_size = 0;       // |M| = n/4 for q8e, 0 otherwise
};

CanonicalB build_canonical_B(const DicyclicGroup& g);

struct FactCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FactReport {
    std::vector<FactCheck> facts;
    bool all_pass() const {
        for (const auto& f : facts)
            if (!f.pass) return false;
        return true;
    }
};

// Structural facts about B, checked on the live permutation groups.
// Generic kind: |B| = 2n, iota outside the regular copy, C = <A, iota>
// abelian, D = <A, iota*x-translation> generalised dihedral on A.
// q8e kind: |B| = 8n, centre = translations by M, exponent 4 (exhaustive
// when |B| <= 2^12, sampled words otherwise), m = |M| = n/4, and the
// inverse-closed subset count equals 2^(5n/8).
FactReport verify_canonical_facts(const DicyclicGroup& g, const CanonicalB& b);

}  // namespace dcc
