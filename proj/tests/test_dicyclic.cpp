#include <doctest.h>

#include "dcc/dicyclic.hpp"
#include "test_util.hpp"

using namespace dcc;

namespace {

DicyclicGroup q8() { return DicyclicGroup::parse("q8e:0"); }
DicyclicGroup dic6() { return DicyclicGroup::parse("dic:C6:y=3"); }

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(DicyclicGroup(AbelianGroup({3, 3}), {0, 0}), std::invalid_argument);  // odd order
    CHECK_THROWS_AS(DicyclicGroup(AbelianGroup({2, 2}), {1, 0}), std::invalid_argument);  // exponent 2
    CHECK_THROWS_AS(DicyclicGroup(AbelianGroup({6}), {2}), std::invalid_argument);        // y order 3
    CHECK_THROWS_AS(DicyclicGroup(AbelianGroup({6}), {0}), std::invalid_argument);        // y identity
}

TEST_CASE("spec parsing") {
    CHECK(q8().spec() == "dic:C4:y=2");
    CHECK(DicyclicGroup::parse("q8e:2").spec() == "dic:C4xC2xC2:y=2,0,0");
    CHECK(DicyclicGroup::parse("DIC:c6:Y=3").spec() == "dic:C6:y=3");
    CHECK_THROWS_AS(DicyclicGroup::parse("dic:C6"), std::invalid_argument);
    CHECK_THROWS_AS(DicyclicGroup::parse("dic:C6:y=9"), std::invalid_argument);
    CHECK_THROWS_AS(DicyclicGroup::parse("dih:C6:y=3"), std::invalid_argument);
    CHECK_THROWS_AS(DicyclicGroup::parse("q8e:"), std::invalid_argument);
}

TEST_CASE("multiplication follows the defining relations") {
    DicyclicGroup g = q8();
    // (ax)^2 = y: with a the C4 generator
    DicyclicElement ax{{1}, 1};
    CHECK(g.mul(ax, ax) == DicyclicElement{{2}, 0});
    // identity
    CHECK(g.mul(g.identity(), ax) == ax);

    DicyclicGroup d6 = dic6();
    CHECK(d6.mul({{1}, 0}, {{0}, 1}) == DicyclicElement{{1}, 1});
    CHECK(d6.mul({{0}, 1}, {{1}, 0}) == DicyclicElement{{5}, 1});
}

TEST_CASE("multiplication matches the table generated by rewriting") {
    // oracle: normal forms a^i x^e with products reduced purely by the
    // relations a^6 = 1, xa = a^5 x, x^2 = a^3
    test::MultTable oracle = test::rewriting_dicyclic_table(6);
    DicyclicGroup g = dic6();
    REQUIRE(oracle.n == g.order());
    for (int i = 0; i < 6; ++i)
        for (int e = 0; e <= 1; ++e)
            for (int j = 0; j < 6; ++j)
                for (int f = 0; f <= 1; ++f) {
                    DicyclicElement u{{i}, e}, v{{j}, f};
                    DicyclicElement w = g.mul(u, v);
                    int expect = oracle.mul(test::rewriting_index(6, i, e),
                                            test::rewriting_index(6, j, f));
                    CHECK(test::rewriting_index(6, w.a[0], w.eps) == expect);
                }
}

TEST_CASE("associativity and element facts, exhaustive over small groups") {
    for (const char* spec : {"q8e:0", "dic:C6:y=3", "dic:C8:y=4", "q8e:1", "dic:C4xC2:y=0,1"}) {
        DicyclicGroup g = DicyclicGroup::parse(spec);
        REQUIRE(g.order() <= 32);
        long long n = g.order();
        for (long long i = 0; i < n; ++i) {
            DicyclicElement u = g.element_at(i);
            CHECK(g.index_of(u) == i);
            CHECK(g.is_identity(g.mul(u, g.inv(u))));
            for (long long j = 0; j < n; ++j)
                for (long long k = 0; k < n; k += 5) {
                    DicyclicElement v = g.element_at(j), w = g.element_at(k);
                    CHECK(g.mul(g.mul(u, v), w) == g.mul(u, g.mul(v, w)));
                }
        }
        // everything outside A has order 4 and squares to y
        for (long long i = n / 2; i < n; ++i) {
            DicyclicElement u = g.element_at(i);
            DicyclicElement sq = g.mul(u, u);
            CHECK(sq == DicyclicElement{g.y(), 0});
            CHECK(g.is_identity(g.mul(sq, sq)));
            CHECK(!g.is_identity(sq));
        }
    }
}

TEST_CASE("inverses") {
    DicyclicGroup g = q8();
    CHECK(g.inv(g.identity()) == g.identity());
    CHECK(g.inv({{0}, 1}) == DicyclicElement{{2}, 1});  // x^-1 = yx
    DicyclicGroup d6 = dic6();
    CHECK(d6.inv({{2}, 0}) == DicyclicElement{{4}, 0});
}

TEST_CASE("element order count m") {
    CHECK(q8().order_le2_count() == 2);
    CHECK(dic6().order_le2_count() == 2);
    CHECK(DicyclicGroup::parse("q8e:1").order_le2_count() == 4);
    // against direct enumeration
    for (const char* spec : {"q8e:0", "dic:C6:y=3", "q8e:1", "dic:C4xC4:y=2,0"}) {
        DicyclicGroup g = DicyclicGroup::parse(spec);
        long long count = 0;
        for (long long i = 0; i < g.order(); ++i)
            if (g.is_identity(g.mul(g.element_at(i), g.element_at(i)))) ++count;
        CHECK(count == g.order_le2_count());
    }
}

TEST_CASE("iota is an involutory automorphism") {
    for (const char* spec : {"q8e:0", "dic:C6:y=3", "q8e:1"}) {
        DicyclicGroup g = DicyclicGroup::parse(spec);
        Permutation iota = g.iota();
        long long n = g.order();
        CHECK(compose(iota, iota).is_identity());
        CHECK(iota[0] == 0);
        // fixes A pointwise, maps the rest to inverses
        for (long long i = 0; i < n / 2; ++i) CHECK(iota[(int)i] == (int)i);
        for (long long i = n / 2; i < n; ++i)
            CHECK(iota[(int)i] == (int)g.index_of(g.inv(g.element_at(i))));
        // homomorphism over all pairs
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                long long lhs = g.index_of(g.mul(g.element_at(iota[(int)i]), g.element_at(iota[(int)j])));
                long long rhs = iota[(int)g.index_of(g.mul(g.element_at(i), g.element_at(j)))];
                CHECK(lhs == rhs);
            }
    }
    // on Q8 it swaps j with -j and k with -k
    DicyclicGroup g = q8();
    Permutation iota = g.iota();
    CHECK(iota[4] == 6);  // (0,x) <-> (2,x)
    CHECK(iota[5] == 7);
    CHECK(iota[6] == 4);
    CHECK(iota[7] == 5);
}

TEST_CASE("q8e recognition against the isomorphism oracle") {
    struct Case {
        const char* spec;
        int l;  // C2 factor count of the candidate Q8 x C2^l of the same order
    };
    for (Case c : {Case{"dic:C4:y=2", 0}, Case{"dic:C6:y=3", 0}, Case{"dic:C8:y=4", 1},
                   Case{"dic:C4xC2:y=2,0", 1}, Case{"dic:C4xC2:y=0,1", 1},
                   Case{"dic:C4xC2:y=2,1", 1}, Case{"dic:C2xC4:y=0,2", 1}}) {
        DicyclicGroup g = DicyclicGroup::parse(c.spec);
        bool oracle = test::tables_isomorphic(test::table_of(g), test::q8_times_e_table(c.l));
        CHECK_MESSAGE(g.is_q8_x_c2l() == oracle, c.spec);
    }
    CHECK(DicyclicGroup::parse("dic:C4:y=2").is_q8_x_c2l());
    CHECK(!DicyclicGroup::parse("dic:C6:y=3").is_q8_x_c2l());
    CHECK(!DicyclicGroup::parse("dic:C4xC2:y=0,1").is_q8_x_c2l());
    CHECK(DicyclicGroup::parse("dic:C2xC4:y=0,2").is_q8_x_c2l());
}
