#include <gtest/gtest.h>

#include <random>

#include "ntc/circuit.hpp"
#include "ntc/sim.hpp"

using namespace ntc;

namespace {

TimedGate g(GateKind k, std::vector<Coord> q, int step) { return TimedGate{k, std::move(q), step, 0.0}; }

// Random nearest-neighbour circuit on a small grid; gates never share a step.
TimedCircuit random_circuit(std::mt19937_64& rng, int rows, int cols, int count) {
    TimedCircuit c(rows, cols);
    int t = 0;
    for (int i = 0; i < count; ++i) {
        Coord a{static_cast<int>(rng() % rows), static_cast<int>(rng() % cols)};
        Coord b = a;
        if (a.c + 1 < cols) b.c++;
        else b.c--;
        if (rng() & 1) std::swap(a, b);
        switch (rng() % 4) {
        case 0: c.gates.push_back(g(GateKind::NOT, {a}, t)); break;
        case 1: c.gates.push_back(g(GateKind::CNOT, {a, b}, t)); break;
        case 2: c.gates.push_back(g(GateKind::SWAP, {a, b}, t)); break;
        default: {
            if (rows < 2) {
                c.gates.push_back(g(GateKind::CNOT, {a, b}, t));
                break;
            }
            Coord d{a.r + 1 < rows ? a.r + 1 : a.r - 1, a.c};
            c.gates.push_back(g(GateKind::CCNOT, {b, a, d}, t));
        }
        }
        t = c.gates.back().end();
    }
    return c;
}

}  // namespace

TEST(Depth, EmptyCircuitIsZero) { EXPECT_EQ(depth(TimedCircuit(2, 2)), 0); }

TEST(Depth, SingleCnotIsOne) {
    TimedCircuit c(1, 2);
    c.gates.push_back(g(GateKind::CNOT, {{0, 0}, {0, 1}}, 0));
    EXPECT_EQ(depth(c), 1);
}

TEST(Depth, SwapMacroIsThree) {
    TimedCircuit c(1, 2);
    c.gates.push_back(g(GateKind::SWAP, {{0, 0}, {0, 1}}, 0));
    EXPECT_EQ(depth(c), 3);
    EXPECT_EQ(depth(expand_macros(c)), 3);
    EXPECT_EQ(expand_macros(c).gates.size(), 3u);
    EXPECT_EQ(gate_counts(c).unit, 3u);
}

TEST(Depth, CcnotMacroIsNine) {
    TimedCircuit c(3, 1);
    c.gates.push_back(g(GateKind::CCNOT, {{0, 0}, {1, 0}, {2, 0}}, 0));
    EXPECT_EQ(depth(c), 9);
    auto e = expand_macros(c);
    EXPECT_EQ(depth(e), 9);
    for (const auto& x : e.gates) EXPECT_FALSE(is_macro(x.kind));
}

TEST(Invert, CvThenCnotBecomesCnotThenCvdag) {
    TimedCircuit c(1, 2);
    c.gates.push_back(g(GateKind::CV, {{0, 0}, {0, 1}}, 0));
    c.gates.push_back(g(GateKind::CNOT, {{0, 0}, {0, 1}}, 1));
    auto inv = in_time_order(invert(c));
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(inv[0].kind, GateKind::CNOT);
    EXPECT_EQ(inv[1].kind, GateKind::CVDAG);
    EXPECT_LT(inv[0].step, inv[1].step);
}

TEST(Invert, IsAnInvolution) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto c = random_circuit(rng, 3, 3, 30);
        auto twice = invert(invert(c));
        EXPECT_EQ(in_time_order(twice), in_time_order(c));
        EXPECT_EQ(depth(invert(c)), depth(c));
    }
}

TEST(Invert, NegatesPhaseAngle) {
    TimedCircuit c(1, 1);
    c.gates.push_back(TimedGate{GateKind::U1, {{0, 0}}, 0, 0.25});
    EXPECT_DOUBLE_EQ(invert(c).gates[0].theta, -0.25);
}

TEST(Invert, BitSimulationRoundTrip) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto c = random_circuit(rng, 3, 4, 40);
        auto both = concat(c, invert(c));
        BitState in(3, 4);
        for (auto& b : in.bits) b = rng() & 1;
        EXPECT_EQ(run_bits(both, in, SimLevel::Block), in);
        EXPECT_EQ(run_bits(both, in, SimLevel::GateClassical), in);
    }
}

TEST(Concat, DepthsAdd) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto a = random_circuit(rng, 2, 3, 1 + t);
        auto b = random_circuit(rng, 2, 3, 2 + t);
        EXPECT_EQ(depth(concat(a, b)), depth(a) + depth(b));
    }
}

TEST(Concat, EmptyIsIdentity) {
    std::mt19937_64 rng(5);
    auto a = random_circuit(rng, 2, 2, 10);
    auto c = concat(a, TimedCircuit(2, 2));
    EXPECT_EQ(c.gates, a.gates);
}

TEST(Concat, TwoGatesOnSameQubitGiveDepthTwo) {
    TimedCircuit a(1, 1), b(1, 1);
    a.gates.push_back(g(GateKind::NOT, {{0, 0}}, 0));
    b.gates.push_back(g(GateKind::NOT, {{0, 0}}, 0));
    EXPECT_EQ(depth(concat(a, b)), 2);
}

TEST(Concat, MismatchedGridThrows) { EXPECT_THROW(concat(TimedCircuit(2, 2), TimedCircuit(2, 3)), DimensionError); }

TEST(Json, RoundTrip) {
    std::mt19937_64 rng(9);
    auto c = random_circuit(rng, 3, 3, 25);
    c.gates.push_back(TimedGate{GateKind::U1, {{1, 1}}, depth(c), 0.5});
    auto back = circuit_from_json(to_json(c));
    EXPECT_EQ(back.rows, c.rows);
    EXPECT_EQ(back.cols, c.cols);
    EXPECT_EQ(back.gates, c.gates);
}

TEST(Json, UnknownKindThrows) {
    nlohmann::json j = {{"rows", 1}, {"cols", 1}, {"gates", {{{"kind", "FOO"}, {"q", {{0, 0}}}, {"step", 0}}}}};
    EXPECT_ANY_THROW(circuit_from_json(j));
}

TEST(Width, CountsDistinctSites) {
    TimedCircuit c(2, 2);
    c.gates.push_back(g(GateKind::CNOT, {{0, 0}, {0, 1}}, 0));
    c.gates.push_back(g(GateKind::NOT, {{0, 1}}, 1));
    c.gates.push_back(g(GateKind::NOT, {{1, 1}}, 1));
    EXPECT_EQ(width(c), 3);
}

TEST(Reschedule, CompactsIdleSteps) {
    TimedCircuit c(1, 2);
    c.gates.push_back(g(GateKind::NOT, {{0, 0}}, 5));
    c.gates.push_back(g(GateKind::NOT, {{0, 1}}, 9));
    c.gates.push_back(g(GateKind::CNOT, {{0, 0}, {0, 1}}, 20));
    EXPECT_EQ(depth(reschedule_asap(c)), 2);
}
