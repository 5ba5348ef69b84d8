#include "ntc/circuit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ntc {

int arity(GateKind k) {
    switch (k) {
    case GateKind::NOT:
    case GateKind::U1: return 1;
    case GateKind::CCNOT: return 3;
    default: return 2;
    }
}

int duration(GateKind k) {
    switch (k) {
    case GateKind::SWAP: return 3;
    case GateKind::CCNOT: return 9;
    default: return 1;
    }
}

bool is_macro(GateKind k) { return k == GateKind::SWAP || k == GateKind::CCNOT; }

const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::NOT: return "NOT";
    case GateKind::U1: return "U1";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CV: return "CV";
    case GateKind::CVDAG: return "CVDAG";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CCNOT: return "CCNOT";
    }
    return "?";
}

GateKind kind_from_name(const std::string& s) {
    static const std::map<std::string, GateKind> names = {
        {"NOT", GateKind::NOT},   {"U1", GateKind::U1},       {"CNOT", GateKind::CNOT},
        {"CV", GateKind::CV},     {"CVDAG", GateKind::CVDAG}, {"SWAP", GateKind::SWAP},
        {"CCNOT", GateKind::CCNOT}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown gate kind: " + s);
    return it->second;
}

GateKind inverse_kind(GateKind k) {
    if (k == GateKind::CV) return GateKind::CVDAG;
    if (k == GateKind::CVDAG) return GateKind::CV;
    return k;
}

int depth(const TimedCircuit& c) {
    int d = 0;
    for (const auto& g : c.gates) d = std::max(d, g.end());
    return d;
}

std::vector<Coord> touched(const TimedCircuit& c) {
    std::set<Coord> s;
    for (const auto& g : c.gates) s.insert(g.q.begin(), g.q.end());
    return {s.begin(), s.end()};
}

int width(const TimedCircuit& c) { return static_cast<int>(touched(c).size()); }

std::vector<TimedGate> expand_gate(const TimedGate& g) {
    using K = GateKind;
    auto mk = [](K k, std::vector<Coord> q, int step) { return TimedGate{k, std::move(q), step, 0.0}; };
    if (g.kind == K::SWAP) {
        Coord a = g.q[0], b = g.q[1];
        return {mk(K::CNOT, {a, b}, g.step), mk(K::CNOT, {b, a}, g.step + 1),
                mk(K::CNOT, {a, b}, g.step + 2)};
    }
    if (g.kind == K::CCNOT) {
        // V exponents on the target: m - (c1 ^ m) + c1 = 2*c1*m
        Coord c1 = g.q[0], m = g.q[1], t = g.q[2];
        int s = g.step;
        return {mk(K::CV, {m, t}, s),       mk(K::CNOT, {c1, m}, s + 1), mk(K::CVDAG, {m, t}, s + 2),
                mk(K::CNOT, {m, c1}, s + 3), mk(K::CNOT, {c1, m}, s + 4), mk(K::CV, {m, t}, s + 5),
                mk(K::SWAP, {c1, m}, s + 6)};
    }
    return {g};
}

TimedCircuit expand_macros(const TimedCircuit& c) {
    TimedCircuit out(c.rows, c.cols);
    std::vector<TimedGate> work = c.gates;
    while (!work.empty()) {
        std::vector<TimedGate> next;
        for (const auto& g : work) {
            if (!is_macro(g.kind)) {
                out.gates.push_back(g);
                continue;
            }
            auto parts = expand_gate(g);
            next.insert(next.end(), parts.begin(), parts.end());
        }
        work = std::move(next);
    }
    std::stable_sort(out.gates.begin(), out.gates.end(),
                     [](const TimedGate& a, const TimedGate& b) { return a.step < b.step; });
    return out;
}

GateCounts gate_counts(const TimedCircuit& c) {
    GateCounts n;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::SWAP) ++n.swaps;
        if (g.kind == GateKind::CCNOT) ++n.ccnots;
    }
    for (const auto& g : expand_macros(c).gates) {
        ++n.unit;
        if (g.kind == GateKind::CNOT) ++n.cnot;
        else if (g.kind == GateKind::CV || g.kind == GateKind::CVDAG) ++n.cv;
        else ++n.one_qubit;
    }
    return n;
}

std::vector<TimedGate> in_time_order(const TimedCircuit& c) {
    std::vector<TimedGate> g = c.gates;
    std::stable_sort(g.begin(), g.end(), [](const TimedGate& a, const TimedGate& b) { return a.step < b.step; });
    return g;
}

TimedCircuit invert(const TimedCircuit& c) {
    TimedCircuit out(c.rows, c.cols);
    int d = depth(c);
    auto ordered = in_time_order(c);
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
        TimedGate g = *it;
        g.kind = inverse_kind(g.kind);
        g.theta = -g.theta;
        g.step = d - it->end();
        out.gates.push_back(std::move(g));
    }
    return out;
}

TimedCircuit concat(const TimedCircuit& a, const TimedCircuit& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionError("concat: grid " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                             " vs " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
    TimedCircuit out = a;
    int off = depth(a);
    for (auto g : b.gates) {
        g.step += off;
        out.gates.push_back(std::move(g));
    }
    return out;
}

TimedCircuit reschedule_asap(const TimedCircuit& c) {
    TimedCircuit out(c.rows, c.cols);
    std::map<Coord, int> ready;
    for (auto g : in_time_order(c)) {
        int t = 0;
        for (auto q : g.q) t = std::max(t, ready[q]);
        g.step = t;
        for (auto q : g.q) ready[q] = g.end();
        out.gates.push_back(std::move(g));
    }
    return out;
}

nlohmann::json to_json(const TimedCircuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json q = nlohmann::json::array();
        for (auto x : g.q) q.push_back({x.r, x.c});
        nlohmann::json jg = {{"kind", kind_name(g.kind)}, {"q", q}, {"step", g.step}};
        if (g.kind == GateKind::U1) jg["theta"] = g.theta;
        gates.push_back(std::move(jg));
    }
    return {{"rows", c.rows}, {"cols", c.cols}, {"gates", std::move(gates)}};
}

TimedCircuit circuit_from_json(const nlohmann::json& j) {
    TimedCircuit c(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& jg : j.at("gates")) {
        TimedGate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        for (const auto& q : jg.at("q")) g.q.push_back({q.at(0).get<int>(), q.at(1).get<int>()});
        g.step = jg.at("step").get<int>();
        if (jg.contains("theta")) g.theta = jg["theta"].get<double>();
        if (static_cast<int>(g.q.size()) != arity(g.kind))
            throw std::invalid_argument(std::string("operand count mismatch for ") + kind_name(g.kind));
        c.gates.push_back(std::move(g));
    }
    return c;
}

}  // namespace ntc
