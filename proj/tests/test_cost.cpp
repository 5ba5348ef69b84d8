#include <gtest/gtest.h>

#include <cmath>

#include "ntc/cost.hpp"

using namespace ntc;

TEST(Models, SevenBuiltins) {
    auto all = builtin_models();
    EXPECT_EQ(all.size(), 7u);
    EXPECT_EQ(model_keys().size(), 7u);
    for (const auto& m : all)
        for (double n = 4; n < 5000; n *= 1.7) {
            EXPECT_GT(m.depth(n), 0) << m.name;
            EXPECT_GT(m.qubits(n), 0) << m.name;
        }
}

TEST(Models, Examples) {
    EXPECT_DOUBLE_EQ(model("cdkm").depth(58), 1058);
    EXPECT_DOUBLE_EQ(model("present").depth(64), 1110);
    EXPECT_DOUBLE_EQ(model("vbe").qubits(10), 31);
    EXPECT_DOUBLE_EQ(model("present").qubits(16), 61);
    EXPECT_DOUBLE_EQ(model("cdkm").kq(4), (18 * 4 + 14) * 10);
    EXPECT_THROW(model("nope"), std::invalid_argument);
}

TEST(Models, ArchitectureFlags) {
    EXPECT_EQ(model("present").arch, Arch::NTC2D);
    EXPECT_EQ(model("cdkm").arch, Arch::NTC1D);
    EXPECT_EQ(model("qft").arch, Arch::AC);
    EXPECT_FALSE(model("qft").comparable_with(model("present")));
    EXPECT_TRUE(model("vbe").comparable_with(model("present")));
}

TEST(Models, KqLeadingTerms) {
    double n = 1e6;
    EXPECT_NEAR(model("present").kq(n) / (n * std::sqrt(n)), 600, 30);
    EXPECT_NEAR(model("cdkm").kq(n) / (n * n), 36, 1.8);
    for (const auto& m : builtin_models())
        if (m.arch != Arch::AC) EXPECT_NEAR(m.kq(n) / m.kq_leading(n), 1.0, 0.05) << m.name;
}

TEST(Crossover, RealDomain) {
    const auto& p = model("present");
    EXPECT_EQ(crossover(p, model("vbe"), Metric::Depth, Domain::RealSqrt).n_star, 4);
    EXPECT_EQ(crossover(p, model("vbe-improved"), Metric::Depth, Domain::RealSqrt).n_star, 49);
    EXPECT_EQ(crossover(p, model("cdkm"), Metric::Depth, Domain::RealSqrt).n_star, 58);
    EXPECT_EQ(crossover(p, model("cdkm"), Metric::KQLeading, Domain::RealSqrt).n_star, 278);
}

TEST(Crossover, ExactProductCrossesEarlierThanLeadingTerms) {
    // (150 sqrt n - 90)(4n - sqrt n + 1) < (18n + 14)(2n + 2) from n = 246 onwards; 245 still loses
    const auto& p = model("present");
    const auto& c = model("cdkm");
    EXPECT_GE(p.kq(245), c.kq(245));
    EXPECT_LT(p.kq(246), c.kq(246));
    EXPECT_EQ(crossover(p, c, Metric::KQ, Domain::RealSqrt).n_star, 246);
    // 600 n sqrt n < 36 n^2 exactly when sqrt n > 50 / 3
    EXPECT_GE(p.kq_leading(277), c.kq_leading(277));
    EXPECT_LT(p.kq_leading(278), c.kq_leading(278));
}

TEST(Crossover, MatchesIndependentScan) {
    // forward scan for the first n from which a stays ahead
    auto scan = [](const DepthModel& a, const DepthModel& b, bool kq, bool squares) {
        long best = -1;
        for (long r = 2;; ++r) {
            long n = squares ? r * r : r + 2;
            if (n > 20000) break;
            double x = static_cast<double>(n);
            bool win = kq ? a.kq(x) < b.kq(x) : a.depth(x) < b.depth(x);
            if (win && best < 0) best = n;
            if (!win) best = -1;
        }
        return best;
    };
    const auto& p = model("present");
    for (const char* other : {"vbe", "vbe-improved", "cdkm"})
        for (bool kq : {false, true})
            for (bool sq : {false, true}) {
                auto r = crossover(p, model(other), kq ? Metric::KQ : Metric::Depth, sq ? Domain::PerfectSquares : Domain::RealSqrt, 20000);
                ASSERT_TRUE(r.n_star.has_value());
                EXPECT_EQ(*r.n_star, scan(p, model(other), kq, sq)) << other << kq << sq;
            }
}

TEST(Crossover, PerfectSquaresRoundUp) {
    const auto& p = model("present");
    auto sq = [&](const char* b, Metric m) { return *crossover(p, model(b), m, Domain::PerfectSquares).n_star; };
    EXPECT_EQ(sq("vbe", Metric::Depth), 4);
    EXPECT_EQ(sq("vbe-improved", Metric::Depth), 49);
    EXPECT_EQ(sq("cdkm", Metric::Depth), 64);
    EXPECT_EQ(sq("cdkm", Metric::KQ), 256);
    EXPECT_EQ(sq("cdkm", Metric::KQLeading), 289);
}

TEST(Crossover, NoneBelowBound) {
    auto r = crossover(model("cdkm"), model("present"), Metric::Depth, Domain::RealSqrt, 1000);
    EXPECT_FALSE(r.n_star.has_value());
    EXPECT_EQ(r.bound, 1000);
}

TEST(Analytic, PhaseSumsAtTenSizes) {
    for (int s = 2; s <= 11; ++s) {
        EXPECT_EQ(analytic::phase1(s), 36 * s - 26);
        EXPECT_EQ(analytic::phase2(s), 18 * s - 18);
        EXPECT_EQ(analytic::phase3(s), 21 * s + 1);
        EXPECT_EQ(analytic::phase1(s) + analytic::phase2(s) + analytic::phase3(s), 75 * s - 43);
        EXPECT_EQ(analytic::compute(s), 75 * s - 43);
        EXPECT_EQ(analytic::full(s), 150 * s - 90);
        EXPECT_EQ(analytic::full(s), static_cast<long>(model("present").depth(s * s)));
    }
}

TEST(Analytic, FourBitRow) {
    EXPECT_EQ(analytic::phase1(2), 46);
    EXPECT_EQ(analytic::column1(2), 36);
    EXPECT_EQ(analytic::phase2(2), 18);
    EXPECT_EQ(analytic::phase3(2), 43);
    EXPECT_EQ(analytic::compute(2), 107);
    EXPECT_EQ(analytic::full(2), 210);
    EXPECT_EQ(analytic::full(4), 510);
}

TEST(Report, RowsCarryAnalyticAndMeasured) {
    auto r = dual_accounting_report(AdderSpec::make(4));
    EXPECT_EQ(r.a_full, 210);
    EXPECT_EQ(r.m_width, 15);
    EXPECT_GT(r.m_full, 0);
    auto j = to_json(r);
    EXPECT_EQ(j["analytic"]["full"], 210);
    EXPECT_DOUBLE_EQ(j["ratio"].get<double>(), r.ratio);
}
