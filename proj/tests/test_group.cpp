#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vilenkin/group.hpp"

#include <numeric>

using namespace vilenkin;

TEST_CASE("orders follow the radix products") {
    const RadixProfile p232({2, 3, 2});
    CHECK(p232.order(0) == 1);
    CHECK(p232.order(1) == 2);
    CHECK(p232.order(2) == 6);
    CHECK(p232.order(3) == 12);

    const RadixProfile dyadic({2, 2, 2});
    CHECK(dyadic.size() == 8);
    CHECK(dyadic.order(2) == 4);

    const RadixProfile p55({5, 5});
    CHECK(p55.order(1) == 5);
    CHECK(p55.order(2) == 25);
}

TEST_CASE("profile construction rejects bad input") {
    CHECK_THROWS_AS(RadixProfile({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RadixProfile({}), std::invalid_argument);
    CHECK_THROWS_AS(RadixProfile({2}, 0), std::invalid_argument);
    // 2^63 overflows signed 64-bit orders.
    CHECK_THROWS_AS(RadixProfile({2}, 63), std::overflow_error);
}

TEST_CASE("cyclic extension of the radix pattern") {
    const RadixProfile p({2, 3}, 5);
    CHECK(p.radix(0) == 2);
    CHECK(p.radix(1) == 3);
    CHECK(p.radix(2) == 2);
    CHECK(p.radix(4) == 2);
    CHECK(p.size() == 2 * 3 * 2 * 3 * 2);
}

TEST_CASE("radix list parsing names the offending entry") {
    CHECK(parse_radices("2,3,2") == std::vector<int>{2, 3, 2});
    CHECK_THROWS_WITH_AS(parse_radices("2,x,2"),
                         "radix list entry 'x' is not an integer", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_radices("2,1"),
                         "radix list entry '1' is invalid: radices must be >= 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_radices(""), std::invalid_argument);
}

TEST_CASE("mixed-radix digits") {
    const RadixProfile p232({2, 3, 2});
    const NaturalIndex seven = digits_of(7, p232);
    CHECK(seven.digits == std::vector<int>{1, 0, 1});
    CHECK(seven.order == 2);

    const NaturalIndex zero = digits_of(0, p232);
    CHECK(zero.digits == std::vector<int>{0, 0, 0});
    CHECK(zero.order == 0);

    const RadixProfile p23({2, 3});
    const NaturalIndex five = digits_of(5, p23);
    CHECK(five.digits == std::vector<int>{1, 2});
    CHECK(five.order == 1);

    CHECK_THROWS_AS(digits_of(6, p23), std::out_of_range);
    CHECK_THROWS_AS(digits_of(-1, p23), std::out_of_range);
}

TEST_CASE("digit reassembly is exact for every representable index") {
    for (const RadixProfile& p :
         {RadixProfile({2, 3, 2}), RadixProfile({5, 5}), RadixProfile({2}, 8), RadixProfile({3, 4, 5})}) {
        for (std::int64_t n = 0; n < p.size(); ++n) {
            const NaturalIndex d = digits_of(n, p);
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < p.resolution(); ++k)
                sum += static_cast<std::int64_t>(d.digits[k]) * p.order(k);
            CHECK(sum == n);
            if (n > 0)
                CHECK(d.digits[d.order] != 0);
        }
    }
}

TEST_CASE("point/index round trip, exhaustive up to 10^4") {
    for (const RadixProfile& p : {RadixProfile({10, 10, 10, 10}), RadixProfile({2, 3, 5, 7}),
                                  RadixProfile({2}, 13)}) {
        REQUIRE(p.size() <= 10000);
        for (std::int64_t idx = 0; idx < p.size(); ++idx) {
            const GroupPoint x = point_of(idx, p);
            CHECK(index_of(x, p) == idx);
        }
    }
}

TEST_CASE("group addition and subtraction") {
    const RadixProfile p23({2, 3});
    const GroupPoint a{{1, 2}};
    CHECK(group_add(a, a, p23).digits == std::vector<int>{0, 1});

    const GroupPoint zero{{0, 0}};
    CHECK(group_add(a, zero, p23).digits == a.digits);
    CHECK(group_sub(zero, GroupPoint{{1, 1}}, p23).digits == std::vector<int>{1, 2});

    CHECK_THROWS_AS(group_add(a, GroupPoint{{1, 1, 1}}, p23), std::invalid_argument);
}

TEST_CASE("abelian group laws, exhaustive") {
    const RadixProfile small({2, 3, 4}); // 24 points: full triple check
    for (std::int64_t i = 0; i < small.size(); ++i)
        for (std::int64_t j = 0; j < small.size(); ++j) {
            const GroupPoint x = point_of(i, small);
            const GroupPoint y = point_of(j, small);
            CHECK(index_of(group_add(x, y, small), small) ==
                  index_of(group_add(y, x, small), small));
            CHECK(index_of(group_add(x, group_sub(y, y, small), small), small) == i);
            for (std::int64_t k = 0; k < small.size(); ++k) {
                const GroupPoint z = point_of(k, small);
                CHECK(index_of(group_add(group_add(x, y, small), z, small), small) ==
                      index_of(group_add(x, group_add(y, z, small), small), small));
            }
        }

    const RadixProfile big({4, 4, 4, 4}); // 256 points: pairwise laws
    for (std::int64_t i = 0; i < big.size(); ++i) {
        const GroupPoint x = point_of(i, big);
        CHECK(index_of(group_sub(x, x, big), big) == 0);
        for (std::int64_t j = 0; j < big.size(); ++j) {
            const GroupPoint y = point_of(j, big);
            CHECK(index_of(group_add(x, y, big), big) == index_of(group_add(y, x, big), big));
            CHECK(index_of(group_sub(group_add(x, y, big), y, big), big) == i);
        }
    }
}

TEST_CASE("cylinder cells and their measure") {
    const RadixProfile dyadic({2, 2, 2});
    // whole group at level 0
    CHECK(cylinder_coset(point_of(5, dyadic), 0, dyadic) == 0);
    CHECK(cell_measure(0, dyadic) == Rational(1, 1));

    const GroupPoint x{{0, 0, 1}};
    CHECK(cylinder_coset(x, 2, dyadic) == 0);
    CHECK(cell_measure(2, dyadic) == Rational(1, 4));

    // two points differing only in the last digit share all lower cells
    const GroupPoint y{{0, 0, 0}};
    for (std::size_t level = 0; level <= 2; ++level)
        CHECK(cylinder_coset(x, level, dyadic) == cylinder_coset(y, level, dyadic));

    CHECK_THROWS_AS(cylinder_coset(x, 4, dyadic), std::out_of_range);
    CHECK_THROWS_AS(cell_measure(4, dyadic), std::out_of_range);
}

TEST_CASE("cell measures sum to one exactly") {
    const RadixProfile p({2, 3, 2, 3});
    for (std::size_t level = 0; level <= p.resolution(); ++level) {
        Rational total(0, 1);
        for (std::int64_t c = 0; c < p.order(level); ++c)
            total = total + cell_measure(level, p);
        CHECK(total == Rational(1, 1));
    }
}

TEST_CASE("rational arithmetic stays reduced and guards overflow") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(3, 4).to_double() == 0.75);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 1), std::overflow_error);
}
