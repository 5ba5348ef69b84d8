#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ntc {

struct Coord {
    int r = 0;
    int c = 0;
    auto operator<=>(const Coord&) const = default;
};

inline int manhattan(Coord a, Coord b) {
    return (a.r > b.r ? a.r - b.r : b.r - a.r) + (a.c > b.c ? a.c - b.c : b.c - a.c);
}

// CCNOT is a macro over (control, middle control, target); the middle control
// must neighbour both other operands. SWAP is a macro of three CNOTs.
enum class GateKind { NOT, U1, CNOT, CV, CVDAG, SWAP, CCNOT };

int arity(GateKind k);
int duration(GateKind k);
bool is_macro(GateKind k);
const char* kind_name(GateKind k);
GateKind kind_from_name(const std::string& s);
GateKind inverse_kind(GateKind k);

struct TimedGate {
    GateKind kind = GateKind::NOT;
    std::vector<Coord> q;
    int step = 0;
    double theta = 0.0;  // U1 only

    int end() const { return step + duration(kind); }
    bool operator==(const TimedGate&) const = default;
};

struct TimedCircuit {
    int rows = 0;
    int cols = 0;
    std::vector<TimedGate> gates;

    TimedCircuit() = default;
    TimedCircuit(int rows_, int cols_) : rows(rows_), cols(cols_) {}

    bool empty() const { return gates.empty(); }
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Depth counts expanded unit steps: a gate occupies [step, step + duration).
int depth(const TimedCircuit& c);
int width(const TimedCircuit& c);
std::vector<Coord> touched(const TimedCircuit& c);

struct GateCounts {
    std::size_t unit = 0;  // after full macro expansion
    std::size_t cnot = 0;
    std::size_t cv = 0;
    std::size_t one_qubit = 0;
    std::size_t swaps = 0;
    std::size_t ccnots = 0;
};
GateCounts gate_counts(const TimedCircuit& c);

// Gates sorted by (step, original position).
std::vector<TimedGate> in_time_order(const TimedCircuit& c);

TimedCircuit invert(const TimedCircuit& c);
TimedCircuit concat(const TimedCircuit& a, const TimedCircuit& b);
TimedCircuit reschedule_asap(const TimedCircuit& c);

// Replace every macro by its unit-gate realisation at the same time slots.
TimedCircuit expand_macros(const TimedCircuit& c);
std::vector<TimedGate> expand_gate(const TimedGate& g);

nlohmann::json to_json(const TimedCircuit& c);
TimedCircuit circuit_from_json(const nlohmann::json& j);

}  // namespace ntc
