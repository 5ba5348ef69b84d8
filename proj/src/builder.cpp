#include "ntc/builder.hpp"

#include <algorithm>
#include <string>

namespace ntc {

namespace {
std::string str(Coord c) { return "(" + std::to_string(c.r) + "," + std::to_string(c.c) + ")"; }
}  // namespace

Builder::Builder(int rows, int cols, const std::vector<Coord>& placement)
    : rows_(rows), cols_(cols), pos_(placement), occ_(rows * cols, -1), ready_(rows * cols, 0) {
    for (int q = 0; q < static_cast<int>(pos_.size()); ++q) {
        Coord c = pos_[q];
        if (c.r < 0 || c.r >= rows || c.c < 0 || c.c >= cols) throw SynthesisError("placement outside grid at " + str(c));
        if (occ_[site(c)] != -1) throw SynthesisError("two qubits placed at " + str(c));
        occ_[site(c)] = q;
    }
}

int Builder::qubit_at(Coord c) const { return occ_[site(c)]; }

void Builder::emit(GateKind k, std::vector<int> qs) {
    TimedGate g;
    g.kind = k;
    int t = floor_;
    for (int q : qs) {
        g.q.push_back(pos_[q]);
        t = std::max(t, ready_[site(pos_[q])]);
    }
    g.step = t;
    for (auto c : g.q) ready_[site(c)] = g.end();
    depth_ = std::max(depth_, g.end());
    gates_.push_back(std::move(g));
}

static void need_adjacent(Coord a, Coord b, const char* what) {
    if (manhattan(a, b) != 1) throw SynthesisError(std::string(what) + " on non-adjacent " + str(a) + " " + str(b));
}

void Builder::x(int q) { emit(GateKind::NOT, {q}); }

void Builder::cx(int c, int t) {
    need_adjacent(pos_[c], pos_[t], "CNOT");
    emit(GateKind::CNOT, {c, t});
}

void Builder::cv(int c, int t) {
    need_adjacent(pos_[c], pos_[t], "CV");
    emit(GateKind::CV, {c, t});
}

void Builder::cvdag(int c, int t) {
    need_adjacent(pos_[c], pos_[t], "CVDAG");
    emit(GateKind::CVDAG, {c, t});
}

void Builder::ccx(int c1, int c2, int t) {
    // either control may serve as the middle of the line
    if (manhattan(pos_[c2], pos_[c1]) == 1 && manhattan(pos_[c2], pos_[t]) == 1) {
        emit(GateKind::CCNOT, {c1, c2, t});
    } else if (manhattan(pos_[c1], pos_[c2]) == 1 && manhattan(pos_[c1], pos_[t]) == 1) {
        emit(GateKind::CCNOT, {c2, c1, t});
    } else {
        throw SynthesisError("CCNOT operands " + str(pos_[c1]) + " " + str(pos_[c2]) + " -> " + str(pos_[t]) +
                             " not on a control-centred line");
    }
}

void Builder::swap(int a, int b) {
    need_adjacent(pos_[a], pos_[b], "SWAP");
    emit(GateKind::SWAP, {a, b});
    std::swap(pos_[a], pos_[b]);
    occ_[site(pos_[a])] = a;
    occ_[site(pos_[b])] = b;
}

void Builder::barrier() { floor_ = depth_; }

TimedCircuit Builder::cut() {
    TimedCircuit out(rows_, cols_);
    for (std::size_t i = mark_; i < gates_.size(); ++i) {
        TimedGate g = gates_[i];
        g.step -= mark_time_;
        out.gates.push_back(std::move(g));
    }
    barrier();
    mark_ = gates_.size();
    mark_time_ = floor_;
    return out;
}

TimedCircuit Builder::all() const {
    TimedCircuit out(rows_, cols_);
    out.gates = gates_;
    return out;
}

}  // namespace ntc
