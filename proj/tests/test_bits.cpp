#include <doctest.h>

#include "dcc/bits.hpp"
#include "dcc/rng.hpp"

using namespace dcc;

TEST_CASE("hex serialization, least significant bit first") {
    Bitset b(12);
    b.set(0);
    b.set(5);
    b.set(11);
    // value 1 + 32 + 2048 = 2081 = 0x821, three digits for 12 bits
    CHECK(b.to_hex() == "821");
    CHECK(Bitset::from_hex("821", 12) == b);
}

TEST_CASE("hex round trip on random masks") {
    SplitMix64 rng(42);
    for (int n : {1, 7, 8, 12, 16, 63, 64, 65, 130}) {
        for (int t = 0; t < 20; ++t) {
            Bitset b(n);
            for (int i = 0; i < n; ++i)
                if (rng.next_bit()) b.set(i);
            CHECK(Bitset::from_hex(b.to_hex(), n) == b);
        }
    }
}

TEST_CASE("from_hex rejects junk") {
    CHECK_THROWS_AS(Bitset::from_hex("8211", 12), std::invalid_argument);  // too long
    CHECK_THROWS_AS(Bitset::from_hex("8g1", 12), std::invalid_argument);   // bad digit
    CHECK_THROWS_AS(Bitset::from_hex("f", 2), std::invalid_argument);      // bit beyond size
    CHECK(Bitset::from_hex("3", 2).count() == 2);
}

TEST_CASE("count and none") {
    Bitset b(70);
    CHECK(b.none());
    b.set(69);
    b.set(0);
    CHECK(b.count() == 2);
    CHECK(!b.none());
    b.set(69, false);
    CHECK(b.count() == 1);
}
