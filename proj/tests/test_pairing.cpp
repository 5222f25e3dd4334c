#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "generators.hpp"
#include "sepcont/pairing.hpp"

using namespace sepcont;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return Rational::from_fraction(p, d); }

// All 4-tuples with coordinate sum <= max_sum, sorted by (sum, lex), then
// filtered. Independent of BoxEnumerator's incremental successor.
std::vector<Box> boxes_by_sorting(std::size_t max_sum) {
    using T = std::array<std::size_t, 4>;
    std::vector<T> tuples;
    for (std::size_t i = 0; i <= max_sum; ++i)
        for (std::size_t j = 0; i + j <= max_sum; ++j)
            for (std::size_t k = 0; i + j + k <= max_sum; ++k)
                for (std::size_t l = 0; i + j + k + l <= max_sum; ++l)
                    tuples.push_back({i, j, k, l});
    std::sort(tuples.begin(), tuples.end(), [](const T& a, const T& b) {
        std::size_t sa = a[0] + a[1] + a[2] + a[3], sb = b[0] + b[1] + b[2] + b[3];
        return sa != sb ? sa < sb : a < b;
    });
    std::vector<Box> out;
    for (const T& t : tuples) {
        Rational a = enumerate(t[0]), b = enumerate(t[1]), c = enumerate(t[2]), d = enumerate(t[3]);
        if (a < b && c < d)
            out.emplace_back(a, b, c, d);
    }
    return out;
}

} // namespace

TEST(Box, RejectsEmptyIntervals) {
    EXPECT_THROW(Box(Rational(1), Rational(1), Rational(0), Rational(1)), invalid_input);
    EXPECT_THROW(Box(Rational(0), Rational(1), Rational(2), Rational(1)), invalid_input);
}

TEST(Box, ContainmentIsStrict) {
    Box b(Rational(0), Rational(1), Rational(0), Rational(1));
    EXPECT_TRUE(b.contains(Point{q(1, 2), q(1, 2)}));
    EXPECT_FALSE(b.contains(Point{Rational(0), q(1, 2)}));
    EXPECT_FALSE(b.contains(Point{q(1, 2), Rational(1)}));
}

TEST(BoxEnumeration, FirstBoxes) {
    EXPECT_EQ(enumerate_box(0), Box(Rational(0), Rational(1), Rational(0), Rational(1)));
    // Tuple (0,1,2,0): (e(0), e(1)) x (e(2), e(0)).
    EXPECT_EQ(enumerate_box(1), Box(Rational(0), Rational(1), Rational(-1), Rational(0)));
}

TEST(BoxEnumeration, MatchesSortedTupleOracle) {
    auto expected = boxes_by_sorting(18);
    ASSERT_GT(expected.size(), 400u);
    EnumerationCache cache;
    BoxEnumerator boxes;
    for (std::size_t k = 0; k < 400; ++k) {
        auto [box, tuple] = boxes.next(cache);
        ASSERT_EQ(box, expected[k]) << k;
    }
}

TEST(BoxEnumeration, EveryBoxIsNonEmpty) {
    EnumerationCache cache;
    BoxEnumerator boxes;
    for (int k = 0; k < 1000; ++k) {
        auto [box, tuple] = boxes.next(cache);
        EXPECT_LT(box.x_lo(), box.x_hi());
        EXPECT_LT(box.y_lo(), box.y_hi());
    }
}

TEST(Pairing, FirstThreeSteps) {
    Pairing p;
    p.extend(1);
    EXPECT_EQ(p[0], (Point{Rational(0), Rational(0)}));
    p.extend(1);
    EXPECT_EQ(p[1], (Point{Rational(1), Rational(1)}));
    p.extend(1);
    EXPECT_EQ(p[2], (Point{q(1, 2), q(1, 2)}));
    ASSERT_EQ(p.coverage().size(), 1u);
    EXPECT_EQ(p.coverage()[0].box_ordinal, 0u);
    EXPECT_EQ(p.coverage()[0].level, 2u);
}

TEST(Pairing, LevelLookupsExtendOnDemand) {
    Pairing p;
    EXPECT_EQ(p.x_level(Rational(0)), 0u);
    EXPECT_EQ(p.x_level(Rational(1)), 1u);
    EXPECT_EQ(p.x_level(q(1, 2)), 2u);
    EXPECT_EQ(p.y_level(Rational(0)), 0u);
    EXPECT_EQ(p.y_level(Rational(1)), 1u);
    EXPECT_EQ(p.y_level(q(1, 2)), 2u);

    Pairing fresh;
    EXPECT_EQ(fresh.y_level(q(1, 2)), 2u);
    EXPECT_EQ(fresh.size(), 3u);
}

TEST(Pairing, LevelLookupRespectsBudget) {
    Pairing p;
    EXPECT_THROW(p.x_level(q(1, 1000), 100), refusal);
    EXPECT_EQ(p.size(), 100u);
}

TEST(Pairing, CoordinatesNeverRepeat) {
    Pairing p;
    p.extend_to(10000);
    std::set<Rational> xs, ys;
    for (const Point& a : p.pairs()) {
        ASSERT_TRUE(xs.insert(a.x).second) << a;
        ASSERT_TRUE(ys.insert(a.y).second) << a;
    }
}

TEST(Pairing, CoordinateCoverage) {
    Pairing p;
    p.extend_to(3003);
    EnumerationCache e;
    for (std::size_t i = 0; i < 1000; ++i) {
        auto mx = p.find_x(e.at(i));
        auto my = p.find_y(e.at(i));
        ASSERT_TRUE(mx && *mx < 3003) << i;
        ASSERT_TRUE(my && *my < 3003) << i;
    }
}

TEST(Pairing, XLevelWithinScheduleBound) {
    testgen::Gen g(21);
    Pairing p;
    for (int s = 0; s < 300; ++s) {
        Rational r = g.rational(6, 9);
        auto idx = index_of(r).value;
        if (idx >= 2000)
            continue;
        std::size_t bound = 3 * (idx.convert_to<std::size_t>() + 1);
        EXPECT_LE(p.x_level(r), bound) << r;
        EXPECT_LE(p.y_level(r), bound) << r;
    }
}

TEST(Pairing, EveryBasicBoxHoldsAPair) {
    Pairing p;
    p.extend_to(3 * 200);
    ASSERT_GE(p.coverage().size(), 200u);
    for (std::size_t k = 0; k < 200; ++k) {
        const CoverageEntry& e = p.coverage()[k];
        EXPECT_EQ(e.box_ordinal, k);
        EXPECT_EQ(e.level, 3 * k + 2);
        EXPECT_EQ(e.box, enumerate_box(k));
        EXPECT_TRUE(e.box.contains(p[e.level])) << k;
    }
}

TEST(Pairing, PicksAreLeastIndexUnused) {
    Pairing p;
    p.extend_to(900);
    std::vector<bool> used_x(20000, false);
    for (std::size_t n = 0; n < p.size(); ++n) {
        std::size_t xi = p.x_enum_index(n);
        EXPECT_EQ(enumerate(xi), p[n].x);
        std::size_t least = 0;
        while (used_x[least])
            ++least;
        if (n % 3 != 2) {
            EXPECT_EQ(xi, least) << n;
        } else {
            const Box& b = p.coverage()[n / 3].box;
            for (std::size_t j = least; j < xi; ++j)
                if (!used_x[j]) {
                    Rational v = enumerate(j);
                    EXPECT_FALSE(b.x_lo() < v && v < b.x_hi()) << n << " skipped " << j;
                }
        }
        used_x[xi] = true;
    }
}

TEST(Pairing, RebuildIsIdentical) {
    Pairing a, b;
    a.extend_to(2000);
    b.extend(1000);
    b.extend(1000);
    EXPECT_TRUE(a == b);
}
