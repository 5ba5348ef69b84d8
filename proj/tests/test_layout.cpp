#include <gtest/gtest.h>

#include <set>

#include "ntc/layout.hpp"

using namespace ntc;

TEST(LogicalCell, Examples) {
    auto spec = AdderSpec::make(16);
    EXPECT_EQ(logical_cell(7, spec), std::make_pair(2, 3));
    EXPECT_EQ(logical_cell(1, spec), std::make_pair(1, 1));
    EXPECT_EQ(logical_cell(16, spec), std::make_pair(4, 4));
}

TEST(LogicalCell, OutOfRangeThrows) {
    auto spec = AdderSpec::make(16);
    EXPECT_THROW(logical_cell(0, spec), std::out_of_range);
    EXPECT_THROW(logical_cell(17, spec), std::out_of_range);
}

TEST(AdderSpec, RejectsBadSizes) {
    EXPECT_THROW(AdderSpec::make(8), SpecError);
    EXPECT_THROW(AdderSpec::make(1), SpecError);
    EXPECT_EQ(AdderSpec::make(49).s, 7);
    EXPECT_EQ(AdderSpec::next_square(10), 16);
    EXPECT_EQ(AdderSpec::next_square(16), 16);
}

TEST(Layout, QubitCounts) {
    auto L4 = build_layout(AdderSpec::make(4));
    EXPECT_EQ(L4.size(), 15);
    auto L = build_layout(AdderSpec::make(16));
    EXPECT_EQ(L.size(), 61);
    int p = 0, cc = 0;
    for (int q = 0; q < L.size(); ++q) {
        p += L.role(q).kind == RoleKind::P;
        cc += L.role(q).kind == RoleKind::ColCarry;
    }
    EXPECT_EQ(p, 9);
    EXPECT_EQ(cc, 4);
}

TEST(Layout, CountFormulaHolds) {
    for (int s = 2; s <= 8; ++s) {
        int n = s * s;
        EXPECT_EQ(build_layout(AdderSpec::make(n)).size(), 4 * n - s + 1) << "n=" << n;
    }
}

TEST(Layout, InjectiveAndInGrid) {
    for (int n : {4, 9, 16, 25, 36}) {
        auto L = build_layout(AdderSpec::make(n));
        std::set<Coord> seen;
        std::set<Role> roles;
        for (int q = 0; q < L.size(); ++q) {
            Coord c = L.home(q);
            EXPECT_GE(c.r, 0);
            EXPECT_LT(c.r, L.rows());
            EXPECT_GE(c.c, 0);
            EXPECT_LT(c.c, L.cols());
            EXPECT_TRUE(seen.insert(c).second);
            EXPECT_TRUE(roles.insert(L.role(q)).second);
            EXPECT_EQ(L.id_at(c), q);
            EXPECT_EQ(L.id(L.role(q)), q);
        }
    }
}

TEST(Layout, CellsAreCompactVerticalStrips) {
    for (int n : {4, 9, 16, 25, 36}) {
        auto L = build_layout(AdderSpec::make(n));
        for (int i = 1; i <= n; ++i) {
            auto [k, j] = logical_cell(i, L.spec());
            std::vector<Coord> cell = {L.at({RoleKind::A, i}), L.at({RoleKind::B, i}), L.at({RoleKind::Cell, i})};
            if (L.has_p(i)) cell.push_back(L.at({RoleKind::P, i}));
            EXPECT_EQ(manhattan(cell[0], cell[1]), 1);
            for (auto x : cell) {
                EXPECT_EQ(x.c, k - 1);
                for (auto y : cell) EXPECT_LE(manhattan(x, y), 3);
            }
            for (std::size_t t = 1; t < cell.size(); ++t) EXPECT_EQ(cell[t].r, cell[t - 1].r + 1);
            (void)j;
        }
    }
}

TEST(Layout, ColumnCarryTouchesColumnBoundary) {
    for (int n : {4, 9, 16, 25}) {
        auto L = build_layout(AdderSpec::make(n));
        int s = L.spec().s;
        for (int k = 1; k <= s; ++k) {
            Coord c = L.at({RoleKind::ColCarry, k});
            EXPECT_EQ(c.r, L.carry_row());
            EXPECT_EQ(c.c, k - 1);
        }
        // column 1's last cell ancilla sits right above its column carry
        EXPECT_EQ(manhattan(L.at({RoleKind::Cell, s}), L.at({RoleKind::ColCarry, 1})), 1);
    }
}

TEST(Layout, PAncillaOnlyBelowFirstRowOfLaterColumns) {
    auto L = build_layout(AdderSpec::make(16));
    for (int i = 1; i <= 16; ++i) {
        auto [k, j] = logical_cell(i, L.spec());
        EXPECT_EQ(L.has_p(i), k >= 2 && j >= 2) << i;
    }
}

TEST(Layout, JsonListsEveryRole) {
    auto L = build_layout(AdderSpec::make(9));
    auto j = L.to_json();
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["roles"].size(), static_cast<std::size_t>(L.size()));
}
