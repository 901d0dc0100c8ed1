#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <map>
#include <set>

#include "dcc/canonical.hpp"
#include "dcc/cayley.hpp"
#include "dcc/rng.hpp"

using namespace dcc;

namespace {

DicyclicGroup q8() { return DicyclicGroup::parse("q8e:0"); }
DicyclicGroup dic6() { return DicyclicGroup::parse("dic:C6:y=3"); }

}  // namespace

TEST_CASE("inverse-closed subset counts") {
    CHECK(count_inverse_closed(q8()) == 32);
    CHECK(count_inverse_closed(dic6()) == 128);
    CHECK(count_inverse_closed(DicyclicGroup::parse("dic:C8:y=4")) == 512);
    CHECK(count_inverse_closed(DicyclicGroup::parse("q8e:1")) == 1024);
    // q8e groups match the 2^(5n/8) form
    for (int l : {0, 1, 2}) {
        DicyclicGroup g = DicyclicGroup::parse("q8e:" + std::to_string(l));
        CHECK(count_inverse_closed(g) == BigInt(1) << (5 * (int)g.order() / 8));
    }
}

TEST_CASE("enumeration is exact, distinct, inverse-closed and deterministic") {
    for (const char* spec : {"q8e:0", "dic:C6:y=3"}) {
        DicyclicGroup g = DicyclicGroup::parse(spec);
        auto sets = enumerate_inverse_closed(g);
        CHECK(BigInt(sets.size()) == count_inverse_closed(g));
        std::set<std::string> seen;
        for (const auto& s : sets) {
            CHECK(is_inverse_closed(g, s));
            seen.insert(s.to_hex());
        }
        CHECK(seen.size() == sets.size());
        CHECK(sets[0].count() == 0);  // index 0 is the empty set
        auto again = enumerate_inverse_closed(g);
        CHECK(again == sets);
    }
    CHECK_THROWS_AS(enumerate_inverse_closed(dic6(), 64), std::domain_error);
}

TEST_CASE("orbit order: self-inverse elements first, then pairs by least element") {
    DicyclicGroup g = dic6();
    InverseOrbits o = inverse_orbits(g);
    CHECK(o.involutions == std::vector<int>{0, 3});
    REQUIRE(o.pairs.size() == 5);
    CHECK(o.pairs[0] == std::pair<int, int>{1, 5});
    CHECK(o.orbit_count() == 7);
    // bit 0 toggles the identity, giving the all-loops singleton
    auto s1 = inverse_closed_at(g, o, 1);
    CHECK(s1.count() == 1);
    CHECK(s1.test(0));
}

TEST_CASE("sampling is deterministic, inverse-closed and near-uniform") {
    DicyclicGroup g = q8();
    CHECK(sample_inverse_closed(g, 17) == sample_inverse_closed(g, 17));
    std::map<std::string, int> freq;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        ConnectionSet s = sample_inverse_closed(g, 100000 + t);
        CHECK(is_inverse_closed(g, s));
        ++freq[s.to_hex()];
    }
    CHECK(freq.size() == 32);
    // binomial p = 1/32: five sigma around the mean
    double mean = trials / 32.0;
    double sigma = std::sqrt(trials * (1.0 / 32) * (31.0 / 32));
    for (const auto& [hex, count] : freq) {
        CHECK(count > mean - 5 * sigma);
        CHECK(count < mean + 5 * sigma);
    }
}

TEST_CASE("graph construction") {
    DicyclicGroup g = q8();

    ConnectionSet empty((int)g.order());
    CayleyGraph edgeless = build_cayley(g, empty, false);
    for (int u = 0; u < edgeless.n; ++u) CHECK(edgeless.out_degree(u) == 0);

    // S = {i, -i}: right multiplication by i walks two disjoint 4-cycles
    ConnectionSet s((int)g.order());
    s.set(1);
    s.set(3);
    REQUIRE(is_inverse_closed(g, s));
    CayleyGraph cycles = build_cayley(g, s, false);
    for (int u = 0; u < cycles.n; ++u) {
        CHECK(cycles.out_degree(u) == 2);
        CHECK(!cycles.arc(u, u));
    }
    // the A-part {1,i,-1,-i} forms one 4-cycle: 0-1-2-3-0
    CHECK(cycles.arc(0, 1));
    CHECK(cycles.arc(1, 2));
    CHECK(cycles.arc(2, 3));
    CHECK(cycles.arc(3, 0));
    CHECK(!cycles.arc(0, 2));
    CHECK(!cycles.arc(0, 4));

    // identity in S puts a loop on every vertex
    ConnectionSet loops((int)g.order());
    loops.set(0);
    CayleyGraph looped = build_cayley(g, loops, false);
    for (int u = 0; u < looped.n; ++u) CHECK(looped.arc(u, u));

    // undirected graphs need inverse-closed sets
    ConnectionSet bad((int)g.order());
    bad.set(4);  // x alone; x^-1 = yx sits at index 6
    CHECK(!is_inverse_closed(g, bad));
    CHECK_THROWS_AS(build_cayley(g, bad, false), std::domain_error);
    CayleyGraph dir = build_cayley(g, bad, true);
    CHECK(dir.out_degree(0) == 1);
}

TEST_CASE("adjacency is invariant under right translation") {
    DicyclicGroup g = dic6();
    SplitMix64 rng(31337);
    ConnectionSet s = sample_inverse_closed(g, 5);
    CayleyGraph graph = build_cayley(g, s, false);
    long long n = g.order();
    for (int t = 0; t < 1000; ++t) {
        long long u = rng.next_below(n), v = rng.next_below(n), w = rng.next_below(n);
        DicyclicElement tw = g.element_at(w);
        int ut = (int)g.index_of(g.mul(g.element_at(u), tw));
        int vt = (int)g.index_of(g.mul(g.element_at(v), tw));
        CHECK(graph.arc((int)u, (int)v) == graph.arc(ut, vt));
    }
}

TEST_CASE("directed sampling covers arbitrary subsets deterministically") {
    DicyclicGroup g = dic6();
    CHECK(sample_subset(g, 3) == sample_subset(g, 3));
    bool saw_not_closed = false;
    for (int t = 0; t < 50 && !saw_not_closed; ++t)
        saw_not_closed = !is_inverse_closed(g, sample_subset(g, t));
    CHECK(saw_not_closed);
}
