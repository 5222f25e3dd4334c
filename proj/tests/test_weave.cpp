#include <gtest/gtest.h>

#include "generators.hpp"
#include "sepcont/weave.hpp"

using namespace sepcont;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return Rational::from_fraction(p, d); }

} // namespace

TEST(BuildLevel, LevelZeroIsTheBaseTentAtOrigin) {
    WovenFunction w;
    const CrossFunction& f0 = w.build_level(0);
    EXPECT_EQ(f0.center(), (Point{Rational(0), Rational(0)}));
    EXPECT_EQ(f0(Point{Rational(0), q(1, 2)}), q(1, 2));
    EXPECT_TRUE(w.table().xi(0).empty());
}

TEST(BuildLevel, LevelOneParameters) {
    WovenFunction w;
    w.build_level(0);
    w.build_level(1);
    ASSERT_EQ(w.table().xi(1).size(), 1u);
    EXPECT_EQ(w.table().xi(1)[0], Rational(0));  // f_0(1, 0)
    EXPECT_EQ(w.table().eta(1)[0], Rational(0)); // f_0(0, 1)
    EXPECT_EQ(w.level(1).radius(), q(1, 2));
}

TEST(BuildLevel, ParameterCountIsTwiceTheLevel) {
    WovenFunction w;
    w.ensure_levels(40);
    for (std::size_t k = 0; k < 40; ++k)
        EXPECT_EQ(w.table().xi(k).size() + w.table().eta(k).size(), 2 * k);
}

TEST(BuildLevel, OutOfOrderRequestRejected) {
    WovenFunction w;
    EXPECT_THROW(w.build_level(1), invalid_state);
    w.build_level(0);
    EXPECT_THROW(w.build_level(5), invalid_state);
    EXPECT_NO_THROW(w.build_level(0));
    EXPECT_EQ(w.built_levels(), 1u);
}

TEST(BuildLevel, BudgetIsEnforced) {
    WovenFunction w(4);
    w.ensure_levels(4);
    EXPECT_THROW(w.build_level(4), refusal);
    EXPECT_THROW(WovenFunction(0), invalid_input);
}

TEST(Eval, WorkedValues) {
    WovenFunction w;
    EXPECT_EQ(w.eval(Rational(0), Rational(0)), Rational(1));
    EXPECT_EQ(w.eval(Rational(0), q(1, 2)), q(1, 2));
    EXPECT_EQ(w.eval(Rational(1), q(3, 4)), q(3, 8));
    EXPECT_EQ(w.eval(Rational(1), q(1, 2)), Rational(0));
}

TEST(Eval, RowRouteWorkedValues) {
    WovenFunction w;
    EXPECT_EQ(w.eval_via_row(Rational(0), Rational(0)), Rational(1));
    EXPECT_EQ(w.eval_via_row(q(1, 2), Rational(0)), q(1, 2));
    EXPECT_EQ(w.eval_via_row(Rational(1), q(1, 2)), Rational(0));
}

TEST(Eval, ExtendsLevelsLazily) {
    WovenFunction w;
    EXPECT_EQ(w.built_levels(), 0u);
    w.eval(q(1, 2), Rational(7));
    EXPECT_EQ(w.built_levels(), 3u);
}

TEST(Eval, RefusesBeyondBudget) {
    WovenFunction w(8);
    EXPECT_THROW(w.eval(q(1, 1000), Rational(0)), refusal);
}

TEST(Lipschitz, PerLevelBounds) {
    WovenFunction w;
    w.ensure_levels(64);
    EXPECT_EQ(w.lipschitz_of_level(0), Rational(1));
    EXPECT_EQ(w.lipschitz_of_level(1), Rational(3));
    for (std::size_t k = 0; k < 64; ++k)
        EXPECT_GE(w.lipschitz_of_level(k), Rational(1));
    EXPECT_THROW(w.lipschitz_of_level(64), invalid_state);
}

TEST(WeaveProperties, DiagonalIsOne) {
    WovenFunction w;
    w.ensure_levels(200);
    for (std::size_t n = 0; n < 200; ++n) {
        const Point& a = w.pairing()[n];
        EXPECT_EQ(w.eval_built(a.x, a.y), Rational(1)) << n;
    }
}

TEST(WeaveProperties, ColumnAndRowRoutesAgree) {
    WovenFunction w;
    w.ensure_levels(60);
    const Pairing& a = w.pairing();
    for (std::size_t m = 0; m < 60; ++m)
        for (std::size_t n = 0; n < 60; ++n)
            ASSERT_EQ(w.eval_built(a[m].x, a[n].y), w.eval_via_row_built(a[m].x, a[n].y)) << m << "," << n;
}

TEST(WeaveProperties, CrossesAgreeWhereTheyMeet) {
    WovenFunction w;
    w.ensure_levels(80);
    const Pairing& a = w.pairing();
    for (std::size_t k = 1; k < 80; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            EXPECT_EQ(w.level(k)(Point{a[k].x, a[i].y}), w.level(i)(Point{a[k].x, a[i].y}));
            EXPECT_EQ(w.level(k)(Point{a[i].x, a[k].y}), w.level(i)(Point{a[i].x, a[k].y}));
        }
    }
}

TEST(WeaveProperties, ParametersInHalfOpenUnitInterval) {
    WovenFunction w;
    w.ensure_levels(128);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < 128; ++k) {
        for (const auto* fam : {&w.table().xi(k), &w.table().eta(k)}) {
            for (const Rational& v : *fam) {
                EXPECT_GE(v, Rational(0));
                EXPECT_LT(v, Rational(1));
                nonzero += !v.is_zero();
            }
        }
    }
    EXPECT_GT(nonzero, 0u);
}

TEST(WeaveProperties, PureAndReproducible) {
    WovenFunction a, b;
    a.ensure_levels(100);
    b.ensure_levels(50);
    b.ensure_levels(100);
    EXPECT_TRUE(a.table() == b.table());
    EXPECT_TRUE(a.pairing() == b.pairing());
    Rational first = a.eval(q(1, 3), q(-2, 7));
    EXPECT_EQ(a.eval(q(1, 3), q(-2, 7)), first);
    EXPECT_EQ(b.eval(q(1, 3), q(-2, 7)), first);
}

TEST(WeaveProperties, SectionsAreLipschitz) {
    testgen::Gen g(41);
    WovenFunction w;
    w.ensure_levels(64);
    const Pairing& a = w.pairing();
    for (std::size_t n = 0; n < 64; ++n) {
        const Rational& lip = w.lipschitz_of_level(n);
        for (int s = 0; s < 100; ++s) {
            // vertical section x = x_n
            Rational y1 = a[g.index(n + 1)].y + w.level(n).radius() * g.rational(2, 10);
            Rational y2 = a[g.index(n + 1)].y + w.level(n).radius() * g.rational(2, 10);
            EXPECT_LE(abs(w.eval_built(a[n].x, y1) - w.eval_built(a[n].x, y2)), lip * abs(y1 - y2));
            // horizontal section y = y_n through two abscissae
            std::size_t m1 = g.index(64), m2 = g.index(64);
            EXPECT_LE(abs(w.eval_built(a[m1].x, a[n].y) - w.eval_built(a[m2].x, a[n].y)), lip * abs(a[m1].x - a[m2].x));
        }
    }
}

TEST(Freeze, StopsGrowthButServesBuiltLevels) {
    WovenFunction w;
    w.freeze(8);
    EXPECT_TRUE(w.frozen());
    EXPECT_EQ(w.built_levels(), 8u);
    const Point& a = w.pairing()[5];
    EXPECT_EQ(w.eval_built(a.x, a.y), Rational(1));
    EXPECT_EQ(w.eval(a.x, a.y), Rational(1));
    EXPECT_THROW(w.build_level(8), invalid_state);
    EXPECT_THROW(w.eval(q(1, 1000), Rational(0)), invalid_state);
}

TEST(Freeze, BuiltEvaluatorsNeverGrow) {
    WovenFunction w;
    w.ensure_levels(3);
    EXPECT_THROW(w.eval_built(Rational(7), Rational(0)), invalid_state);
    EXPECT_THROW(w.eval_via_row_built(Rational(0), Rational(7)), invalid_state);
    EXPECT_EQ(w.built_levels(), 3u);
}
