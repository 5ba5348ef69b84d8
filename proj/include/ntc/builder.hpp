#pragma once

#include <stdexcept>
#include <vector>

#include "ntc/circuit.hpp"

namespace ntc {

class SynthesisError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Emits gates on logical qubits, tracks where SWAPs move them, and places
// each gate at the earliest step its operand sites are free (program order).
class Builder {
public:
    Builder(int rows, int cols, const std::vector<Coord>& placement);

    Coord at(int q) const { return pos_[q]; }
    int qubit_at(Coord c) const;
    int qubits() const { return static_cast<int>(pos_.size()); }

    void x(int q);
    void cx(int control, int target);
    void cv(int control, int target);
    void cvdag(int control, int target);
    void ccx(int c1, int c2, int target);
    void swap(int a, int b);

    // Later gates may not start before everything emitted so far has finished.
    void barrier();
    int depth() const { return depth_; }

    // Gates emitted since the previous cut, rebased to start at step 0,
    // followed by a barrier.
    TimedCircuit cut();
    TimedCircuit all() const;

private:
    int site(Coord c) const { return c.r * cols_ + c.c; }
    void emit(GateKind k, std::vector<int> qs);

    int rows_, cols_;
    std::vector<Coord> pos_;
    std::vector<int> occ_;
    std::vector<int> ready_;
    std::vector<TimedGate> gates_;
    int floor_ = 0;
    int depth_ = 0;
    std::size_t mark_ = 0;
    int mark_time_ = 0;
};

}  // namespace ntc
