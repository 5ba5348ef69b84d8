#include "ntc/cost.hpp"

#include <cmath>
#include <stdexcept>

#include "ntc/synth.hpp"
#include "ntc/verifier.hpp"

namespace ntc {

const char* arch_name(Arch a) {
    switch (a) {
    case Arch::NTC1D: return "1D-NTC";
    case Arch::NTC2D: return "2D-NTC";
    case Arch::AC: return "AC";
    }
    return "?";
}

namespace {

struct Keyed {
    std::string key;
    DepthModel m;
};

const std::vector<Keyed>& table() {
    static const std::vector<Keyed> t = [] {
        using std::log2;
        using std::sqrt;
        std::vector<Keyed> v;
        v.push_back({"vbe", {"VBE", Arch::NTC1D, [](double n) { return 76 * n - 30; }, [](double n) { return 3 * n + 1; },
                             [](double n) { return 228 * n * n; }}});
        v.push_back({"vbe-improved",
                     {"VBE-Improved", Arch::NTC1D, [](double n) { return 20 * n - 15; }, [](double n) { return 3 * n + 1; },
                      [](double n) { return 60 * n * n; }}});
        v.push_back({"cdkm", {"CDKM", Arch::NTC1D, [](double n) { return 18 * n + 14; }, [](double n) { return 2 * n + 2; },
                              [](double n) { return 36 * n * n; }}});
        v.push_back({"present",
                     {"Present", Arch::NTC2D, [](double n) { return 150 * sqrt(n) - 90; },
                      [](double n) { return 4 * n - sqrt(n) + 1; }, [](double n) { return 600 * n * sqrt(n); }}});
        v.push_back({"qft", {"QFT-based", Arch::AC, [](double n) { return 3 * log2(n); }, [](double n) { return 2 * n + 1; },
                             [](double n) { return 6 * n * log2(n); }}});
        v.push_back({"cla",
                     {"CLA-based", Arch::AC, [](double n) { return 2 * log2(n) + 2; }, [](double n) { return 4 * n - log2(n); },
                      [](double n) { return 8 * n * log2(n); }}});
        v.push_back({"rca+cla",
                     {"RCA+CLA-based", Arch::AC, [](double n) { return 10 * log2(n) + 6 * n / log2(n); },
                      [](double n) { return n + 4 * n / log2(n); }, [](double n) { return 10 * n * log2(n); }}});
        return v;
    }();
    return t;
}

}  // namespace

std::vector<DepthModel> builtin_models() {
    std::vector<DepthModel> v;
    for (const auto& k : table()) v.push_back(k.m);
    return v;
}

std::vector<std::string> model_keys() {
    std::vector<std::string> v;
    for (const auto& k : table()) v.push_back(k.key);
    return v;
}

const DepthModel& model(const std::string& key) {
    for (const auto& k : table())
        if (k.key == key) return k.m;
    throw std::invalid_argument("unknown model: " + key);
}

Crossover crossover(const DepthModel& a, const DepthModel& b, Metric metric, Domain domain, long bound) {
    auto f = [&](const DepthModel& m, double n) {
        switch (metric) {
        case Metric::Depth: return m.depth(n);
        case Metric::KQ: return m.kq(n);
        case Metric::KQLeading: return m.kq_leading(n);
        }
        return 0.0;
    };
    std::vector<long> ns;
    if (domain == Domain::RealSqrt)
        for (long n = 4; n <= bound; ++n) ns.push_back(n);
    else
        for (long r = 2; r * r <= bound; ++r) ns.push_back(r * r);

    Crossover out;
    out.bound = bound;
    // scan from the top so that the answer is the start of the final winning run
    for (auto it = ns.rbegin(); it != ns.rend(); ++it) {
        double n = static_cast<double>(*it);
        if (f(a, n) < f(b, n)) out.n_star = *it;
        else break;
    }
    return out;
}

namespace analytic {
long phase1(int s) { return 36L * s - 26; }
long phase2(int s) { return 18L * s - 18; }
long phase3(int s) { return 21L * s + 1; }
long compute(int s) { return 75L * s - 43; }
long carry_flow(int s) { return 75L * s - 50; }
long sum_flow() { return 7; }
long full(int s) { return 2 * carry_flow(s) + sum_flow() + 3; }
long column1(int s) { return 26L * s - 16; }
long width(int n, int s) { return 4L * n - s + 1; }
}  // namespace analytic

DualAccountingRow dual_accounting_report(const AdderSpec& spec) {
    auto ac = synth_full(spec);
    DualAccountingRow r;
    r.n = spec.n;
    r.a_phase1 = analytic::phase1(spec.s);
    r.a_phase2 = analytic::phase2(spec.s);
    r.a_phase3 = analytic::phase3(spec.s);
    r.a_compute = analytic::compute(spec.s);
    r.a_full = analytic::full(spec.s);
    r.m_phase1 = measured_depth(ac.phase1);
    r.m_phase2 = measured_depth(ac.phase2);
    r.m_phase3 = measured_depth(ac.phase3);
    r.m_compute = measured_depth(ac.compute);
    r.m_carry_flow = measured_depth(ac.carry_flow);
    r.m_sum_flow = measured_depth(ac.sum_flow);
    r.m_full = measured_depth(ac.full);
    r.m_width = measured_width(ac.full);
    r.ratio = static_cast<double>(r.m_full) / static_cast<double>(r.a_full);
    return r;
}

nlohmann::json to_json(const DualAccountingRow& r) {
    return {{"n", r.n},
            {"analytic", {{"phase1", r.a_phase1}, {"phase2", r.a_phase2}, {"phase3", r.a_phase3}, {"compute", r.a_compute}, {"full", r.a_full}}},
            {"measured",
             {{"phase1", r.m_phase1},
              {"phase2", r.m_phase2},
              {"phase3", r.m_phase3},
              {"compute", r.m_compute},
              {"carry_flow", r.m_carry_flow},
              {"sum_flow", r.m_sum_flow},
              {"full", r.m_full},
              {"width", r.m_width}}},
            {"ratio", r.ratio}};
}

}  // namespace ntc
