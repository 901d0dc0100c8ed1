#pragma once

#include <cstdint>
#include <vector>

#include "dcc/bits.hpp"
#include "dcc/dicyclic.hpp"
#include "dcc/perm.hpp"

namespace dcc {

// Subset of the group, one bit per element in the fixed enumeration.
// Serialized as a lowercase hex mask, least significant bit = element 0.
struct ConnectionSet {
    Bitset bits;

    ConnectionSet() = default;
    explicit ConnectionSet(int n) : bits(n) {}

    int size() const { return bits.size(); }
    int count() const { return bits.count(); }
    bool test(int i) const { return bits.test(i); }
    void set(int i, bool v = true) { bits.set(i, v); }
    std::string to_hex() const { return bits.to_hex(); }
    static ConnectionSet from_hex(const std::string& hex, int n) {
        ConnectionSet s;
        s.bits = Bitset::from_hex(hex, n);
        return s;
    }
    bool operator==(const ConnectionSet&) const = default;
};

bool is_inverse_closed(const DicyclicGroup& g, const ConnectionSet& s);

// Graph or digraph on the group's element enumeration. Adjacency rows are
// bit rows of `words` 64-bit words each; loops are kept (u ~ u iff the
// identity is in S). For digraphs the transposed rows are kept too, the
// refinement code wants both directions.
struct CayleyGraph {
    int n = 0;
    bool directed = false;
    int words = 0;
    std::vector<std::uint64_t> out;  // n rows
    std::vector<std::uint64_t> in;   // n rows, directed only

    const std::uint64_t* out_row(int u) const { return out.data() + (size_t)u * words; }
    const std::uint64_t* in_row(int u) const { return in.data() + (size_t)u * words; }
    bool arc(int u, int v) const { return (out_row(u)[v >> 6] >> (v & 63)) & 1u; }
    int out_degree(int u) const;
};

// vertices u ~ v (arc (u,v) when directed) iff element(u)*element(v)^-1 in S;
// undirected mode requires S inverse-closed
CayleyGraph build_cayley(const DicyclicGroup& g, const ConnectionSet& s, bool directed);

// Orbits of the inversion map r <-> r^-1, in the fixed order that defines
// connection-set indices: self-paired elements (r^2 = 1) first by element
// index, then pairs {r, r^-1} by least element index. Bit j of an index
// selects orbit j.
struct InverseOrbits {
    std::vector<int> involutions;           // includes the identity
    std::vector<std::pair<int, int>> pairs;  // (r, r^-1) with r < r^-1
    int orbit_count() const { return (int)(involutions.size() + pairs.size()); }
};

InverseOrbits inverse_orbits(const DicyclicGroup& g);

// 2^(m/2 + n/2), exact
BigInt count_inverse_closed(const DicyclicGroup& g);

// the index'th inverse-closed subset; index must be < 2^orbit_count
ConnectionSet inverse_closed_at(const DicyclicGroup& g, const InverseOrbits& orbits,
                                std::uint64_t index);

// all inverse-closed subsets in index order; refuses when the count
// exceeds cap (sample instead)
std::vector<ConnectionSet> enumerate_inverse_closed(const DicyclicGroup& g,
                                                    std::uint64_t cap = 1ull << 16);

// uniform over all inverse-closed subsets: each orbit is included
// independently with probability 1/2, bits drawn from splitmix64(seed)
ConnectionSet sample_inverse_closed(const DicyclicGroup& g, std::uint64_t seed);

// uniform over all 2^n subsets (digraph censuses)
ConnectionSet sample_subset(const DicyclicGroup& g, std::uint64_t seed);

}  // namespace dcc
