#include "ntc/verifier.hpp"

#include <algorithm>
#include <map>

namespace ntc {

const char* violation_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::NonAdjacent: return "NonAdjacent";
    case ViolationKind::OperandClash: return "OperandClash";
    case ViolationKind::OutOfGrid: return "OutOfGrid";
    case ViolationKind::BadStep: return "BadStep";
    }
    return "?";
}

nlohmann::json to_json(const Violation& v) {
    return {{"kind", violation_name(v.kind)}, {"step", v.step}, {"gates", v.gates}, {"detail", v.detail}};
}

std::vector<Violation> verify(const TimedCircuit& c) {
    std::vector<Violation> out;
    struct Use {
        int start, end;
        std::size_t gate;
    };
    std::map<Coord, std::vector<Use>> uses;

    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const auto& g = c.gates[i];
        if (g.step < 0 || static_cast<int>(g.q.size()) != arity(g.kind)) {
            out.push_back({ViolationKind::BadStep, g.step, {i}, "negative step or wrong operand count"});
            continue;
        }
        bool in_grid = true;
        for (auto q : g.q)
            if (q.r < 0 || q.c < 0 || q.r >= c.rows || q.c >= c.cols) in_grid = false;
        if (!in_grid) {
            out.push_back({ViolationKind::OutOfGrid, g.step, {i}, kind_name(g.kind)});
            continue;
        }
        bool adjacent = true;
        if (g.q.size() == 2) adjacent = manhattan(g.q[0], g.q[1]) == 1;
        if (g.q.size() == 3) adjacent = manhattan(g.q[1], g.q[0]) == 1 && manhattan(g.q[1], g.q[2]) == 1;
        if (!adjacent) out.push_back({ViolationKind::NonAdjacent, g.step, {i}, kind_name(g.kind)});
        for (std::size_t a = 0; a < g.q.size(); ++a)
            for (std::size_t b = a + 1; b < g.q.size(); ++b)
                if (g.q[a] == g.q[b]) out.push_back({ViolationKind::NonAdjacent, g.step, {i}, "repeated operand"});
        for (auto q : g.q) uses[q].push_back({g.step, g.end(), i});
    }

    for (auto& [q, v] : uses) {
        std::sort(v.begin(), v.end(), [](const Use& a, const Use& b) { return a.start < b.start; });
        std::size_t last = 0;  // earlier interval reaching furthest
        for (std::size_t k = 1; k < v.size(); ++k) {
            if (v[last].end > v[k].start)
                out.push_back({ViolationKind::OperandClash, v[k].start, {v[last].gate, v[k].gate},
                               "(" + std::to_string(q.r) + "," + std::to_string(q.c) + ")"});
            if (v[k].end > v[last].end) last = k;
        }
    }
    return out;
}

VerificationFailed::VerificationFailed(std::vector<Violation> v)
    : std::runtime_error("circuit violates nearest-neighbour constraints (" + std::to_string(v.size()) + " violations)"),
      violations(std::move(v)) {}

int measured_depth(const TimedCircuit& c) {
    auto v = verify(c);
    if (!v.empty()) throw VerificationFailed(std::move(v));
    return depth(c);
}

int measured_width(const TimedCircuit& c) {
    auto v = verify(c);
    if (!v.empty()) throw VerificationFailed(std::move(v));
    return width(c);
}

}  // namespace ntc
