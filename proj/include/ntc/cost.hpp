#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntc/layout.hpp"

namespace ntc {

enum class Arch { NTC1D, NTC2D, AC };
const char* arch_name(Arch a);

struct DepthModel {
    std::string name;
    Arch arch = Arch::NTC1D;
    std::function<double(double)> depth;
    std::function<double(double)> qubits;
    std::function<double(double)> kq_leading;  // leading term of depth * qubits as tabulated

    double kq(double n) const { return depth(n) * qubits(n); }
    bool comparable_with(const DepthModel& o) const { return (arch == Arch::AC) == (o.arch == Arch::AC); }
};

std::vector<DepthModel> builtin_models();
const DepthModel& model(const std::string& key);  // "present", "vbe", "vbe-improved", "cdkm", "qft", "cla", "rca+cla"
std::vector<std::string> model_keys();

enum class Metric { Depth, KQ, KQLeading };
enum class Domain { PerfectSquares, RealSqrt };

struct Crossover {
    std::optional<long> n_star;  // empty when no crossover below the bound
    long bound = 0;
};

// Smallest n >= 4 in the domain from which model a stays strictly below b
// up to the bound.
Crossover crossover(const DepthModel& a, const DepthModel& b, Metric metric, Domain domain, long bound = 100000);

// Closed forms of the present adder
namespace analytic {
long phase1(int s);
long phase2(int s);
long phase3(int s);
long compute(int s);
long carry_flow(int s);
long sum_flow();
long full(int s);
long column1(int s);
long width(int n, int s);
}  // namespace analytic

struct DualAccountingRow {
    int n = 0;
    long a_phase1 = 0, a_phase2 = 0, a_phase3 = 0, a_compute = 0, a_full = 0;
    int m_phase1 = 0, m_phase2 = 0, m_phase3 = 0, m_compute = 0, m_carry_flow = 0, m_sum_flow = 0, m_full = 0;
    int m_width = 0;
    double ratio = 0.0;  // measured full / analytic full
};

DualAccountingRow dual_accounting_report(const AdderSpec& spec);
nlohmann::json to_json(const DualAccountingRow& r);

}  // namespace ntc
