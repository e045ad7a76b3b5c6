#include <doctest.h>

#include "pgdual/bitset.hpp"

using pgdual::Bitset;

TEST_CASE("bitset basics across word boundaries") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK(!b.test(1));
    CHECK(b.first() == 0);
    CHECK(b.ids() == std::vector<int>{0, 63, 64, 129});
    b.reset(0);
    CHECK(b.first() == 63);
}

TEST_CASE("bitset all() keeps trailing bits clear") {
    Bitset a = Bitset::all(70);
    CHECK(a.count() == 70);
    Bitset b = Bitset::all(70);
    b &= a;
    CHECK(b == a);
    CHECK(Bitset::all(64).count() == 64);
    CHECK(Bitset::all(0).count() == 0);
}

TEST_CASE("intersection, union, subset") {
    Bitset a = Bitset::of(10, {1, 3, 5});
    Bitset b = Bitset::of(10, {3, 5, 7});
    CHECK((a & b).ids() == std::vector<int>{3, 5});
    CHECK((a | b).ids() == std::vector<int>{1, 3, 5, 7});
    CHECK(a.contains_all(Bitset::of(10, {1, 5})));
    CHECK(!a.contains_all(b));
    CHECK(a.intersects(b));
    CHECK(!a.intersects(Bitset::of(10, {0, 2})));
    CHECK(Bitset::of(10, {3}).is_singleton());
}

TEST_CASE("lexicographic order on id sequences") {
    Bitset a = Bitset::of(16, {0, 1, 7});
    Bitset b = Bitset::of(16, {0, 2, 3});
    Bitset c = Bitset::of(16, {0, 1});
    CHECK(a.lex_less(b));
    CHECK(!b.lex_less(a));
    CHECK(c.lex_less(a));  // prefix sorts first
    CHECK(!a.lex_less(a));
}
