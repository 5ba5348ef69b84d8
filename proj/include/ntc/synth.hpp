#pragma once

#include <cstdint>
#include <vector>

#include "ntc/circuit.hpp"
#include "ntc/layout.hpp"
#include "ntc/sim.hpp"

namespace ntc {

using Bits = std::vector<bool>;  // little-endian, bit i-1 of a register is index i-1

struct AdderCircuit {
    AdderSpec spec;
    GridLayout layout;

    TimedCircuit phase1;
    TimedCircuit phase2;
    TimedCircuit phase3_carry;  // carry blocks plus P ancilla clearing
    TimedCircuit sum_flow;      // SUM blocks plus the carry-out copy
    TimedCircuit phase3;        // phase3_carry then sum_flow

    TimedCircuit carry_flow;  // phase1 + phase2 + phase3_carry, the part that is inverted
    TimedCircuit compute;     // carry_flow + sum_flow
    TimedCircuit unsum;       // restores A xor B in the column-1 B sites
    TimedCircuit not_layer;
    TimedCircuit cnot_layer;
    TimedCircuit uncompute;   // unsum, NOT, CNOT, inverse carry flow, NOT
    TimedCircuit full;

    // qubit id -> coordinate at the end of each stage
    std::vector<Coord> after_phase1, after_phase2, after_compute;

    explicit AdderCircuit(const AdderSpec& s) : spec(s), layout(s) {}
};

AdderCircuit synth_full(const AdderSpec& spec);
TimedCircuit synth_phase1(const AdderSpec& spec, const GridLayout& layout);
TimedCircuit synth_phase2(const AdderSpec& spec, const GridLayout& layout);
TimedCircuit synth_phase3(const AdderSpec& spec, const GridLayout& layout);

// Qubit that holds the carry out of column k once phase 2 has run.
int column_carry_qubit(const GridLayout& layout, int k);

Bits to_bits(std::uint64_t v, int n);
std::uint64_t from_bits(const Bits& b);

BitState encode_inputs(const GridLayout& layout, const Bits& a, const Bits& b);

struct AdderReadout {
    Bits a;
    Bits s;
    bool carry = false;
    bool ancillae_clean = true;
};

// Reads the final state of `full` (every qubit back at its home site).
AdderReadout read_outputs(const GridLayout& layout, const BitState& st);

// value of qubit q when qubits sit at `where`
bool qubit_value(const BitState& st, const std::vector<Coord>& where, int q);

}  // namespace ntc
