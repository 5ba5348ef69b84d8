#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntc/circuit.hpp"

namespace ntc {

enum class ViolationKind { NonAdjacent, OperandClash, OutOfGrid, BadStep };

const char* violation_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int step = 0;
    std::vector<std::size_t> gates;  // indices into circuit.gates
    std::string detail;
};

nlohmann::json to_json(const Violation& v);

// 4-neighbourhood adjacency; CCNOT macros need their middle control next to
// both other operands; a gate holds its operands for its whole duration.
std::vector<Violation> verify(const TimedCircuit& c);

class VerificationFailed : public std::runtime_error {
public:
    explicit VerificationFailed(std::vector<Violation> v);
    std::vector<Violation> violations;
};

int measured_depth(const TimedCircuit& c);
int measured_width(const TimedCircuit& c);

}  // namespace ntc
