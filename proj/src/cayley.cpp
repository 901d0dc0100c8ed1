#include "dcc/cayley.hpp"

#include <bit>
#include <stdexcept>

#include "dcc/rng.hpp"

namespace dcc {

bool is_inverse_closed(const DicyclicGroup& g, const ConnectionSet& s) {
    long long n = g.order();
    for (long long i = 0; i < n; ++i) {
        if (!s.test((int)i)) continue;
        long long j = g.index_of(g.inv(g.element_at(i)));
        if (!s.test((int)j)) return false;
    }
    return true;
}

int CayleyGraph::out_degree(int u) const {
    int c = 0;
    const std::uint64_t* row = out_row(u);
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

CayleyGraph build_cayley(const DicyclicGroup& g, const ConnectionSet& s, bool directed) {
    long long n = g.order();
    if (s.size() != n) throw std::invalid_argument("connection set size does not match group order");
    if (!directed && !is_inverse_closed(g, s))
        throw std::domain_error("undirected Cayley graph needs an inverse-closed connection set");

    CayleyGraph gr;
    gr.n = (int)n;
    gr.directed = directed;
    gr.words = (int)((n + 63) / 64);
    gr.out.assign((size_t)gr.n * gr.words, 0);
    if (directed) gr.in.assign((size_t)gr.n * gr.words, 0);

    std::vector<DicyclicElement> elems((size_t)n);
    std::vector<DicyclicElement> invs((size_t)n);
    for (long long i = 0; i < n; ++i) {
        elems[i] = g.element_at(i);
        invs[i] = g.inv(elems[i]);
    }
    for (int u = 0; u < gr.n; ++u) {
        std::uint64_t* row = gr.out.data() + (size_t)u * gr.words;
        for (int v = 0; v < gr.n; ++v) {
            long long q = g.index_of(g.mul(elems[u], invs[v]));
            if (s.test((int)q)) {
                row[v >> 6] |= std::uint64_t(1) << (v & 63);
                if (directed) gr.in[(size_t)v * gr.words + (u >> 6)] |= std::uint64_t(1) << (u & 63);
            }
        }
    }
    return gr;
}

InverseOrbits inverse_orbits(const DicyclicGroup& g) {
    long long n = g.order();
    InverseOrbits o;
    for (long long i = 0; i < n; ++i) {
        long long j = g.index_of(g.inv(g.element_at(i)));
        if (j == i)
            o.involutions.push_back((int)i);
        else if (i < j)
            o.pairs.emplace_back((int)i, (int)j);
    }
    return o;
}

BigInt count_inverse_closed(const DicyclicGroup& g) {
    long long k = (g.order_le2_count() + g.order()) / 2;
    return BigInt(1) << k;
}

ConnectionSet inverse_closed_at(const DicyclicGroup& g, const InverseOrbits& orbits,
                                std::uint64_t index) {
    if (orbits.orbit_count() < 64 && index >= (std::uint64_t(1) << orbits.orbit_count()))
        throw std::invalid_argument("connection set index out of range");
    ConnectionSet s((int)g.order());
    std::size_t j = 0;
    for (int r : orbits.involutions) {
        if ((index >> j) & 1) s.set(r);
        ++j;
    }
    for (auto [r, ri] : orbits.pairs) {
        if ((index >> j) & 1) {
            s.set(r);
            s.set(ri);
        }
        ++j;
    }
    return s;
}

std::vector<ConnectionSet> enumerate_inverse_closed(const DicyclicGroup& g, std::uint64_t cap) {
    BigInt total = count_inverse_closed(g);
    if (total > BigInt(cap))
        throw std::domain_error("too many inverse-closed subsets to enumerate; use sampling");
    InverseOrbits orbits = inverse_orbits(g);
    std::uint64_t count = total.convert_to<std::uint64_t>();
    std::vector<ConnectionSet> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(inverse_closed_at(g, orbits, i));
    return out;
}

ConnectionSet sample_inverse_closed(const DicyclicGroup& g, std::uint64_t seed) {
    InverseOrbits orbits = inverse_orbits(g);
    SplitMix64 rng(seed);
    ConnectionSet s((int)g.order());
    for (int r : orbits.involutions)
        if (rng.next_bit()) s.set(r);
    for (auto [r, ri] : orbits.pairs)
        if (rng.next_bit()) {
            s.set(r);
            s.set(ri);
        }
    return s;
}

ConnectionSet sample_subset(const DicyclicGroup& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ConnectionSet s((int)g.order());
    for (long long i = 0; i < g.order(); ++i)
        if (rng.next_bit()) s.set((int)i);
    return s;
}

}  // namespace dcc
