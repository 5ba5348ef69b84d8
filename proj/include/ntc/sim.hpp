#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "ntc/blocks.hpp"
#include "ntc/circuit.hpp"

namespace ntc {

class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

enum class SimLevel { Block, GateClassical };

struct BitState {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;

    BitState() = default;
    BitState(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {}

    bool get(Coord q) const { return bits[idx(q)] != 0; }
    void set(Coord q, bool v) { bits[idx(q)] = v ? 1 : 0; }
    bool operator==(const BitState&) const = default;

private:
    std::size_t idx(Coord q) const { return static_cast<std::size_t>(q.r) * cols + q.c; }
};

// Block level applies macros as whole gates; gate-classical level expands
// them and tracks each qubit's pending power of V, rejecting any controlled
// use of, or final state with, a half-applied V.
BitState run_bits(const TimedCircuit& c, BitState in, SimLevel level);

struct AmpState {
    std::vector<Coord> order;  // qubit k is bit k of the basis index
    Eigen::VectorXcd amp;
};

constexpr int kMaxAmpQubits = 20;
constexpr int kMaxUnitaryQubits = 10;

Eigen::Matrix2cd v_matrix();

AmpState run_amps(const TimedCircuit& c, std::uint64_t basis, std::vector<Coord> order = {});
Eigen::MatrixXcd unitary_of(const TimedCircuit& c, std::vector<Coord> order = {});
// Ordered by the netlist footprint, i.e. by port.
Eigen::MatrixXcd unitary_of(const BlockNetlist& b);

// NTC_ADDER_THREADS caps the worker count.
int worker_count();
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ntc
