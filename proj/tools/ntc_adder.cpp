#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntc/cost.hpp"
#include "ntc/synth.hpp"
#include "ntc/verifier.hpp"

using nlohmann::json;
using namespace ntc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bits parse_value(std::string v, int n) {
    Bits out(n, false);
    auto put = [&](std::size_t i, bool bit) {
        if (!bit) return;
        if (i >= out.size()) throw UsageError("value " + v + " does not fit in " + std::to_string(n) + " bits");
        out[i] = true;
    };
    if (v.rfind("0x", 0) == 0 || v.rfind("0X", 0) == 0) {
        std::string h = v.substr(2);
        if (h.empty()) throw UsageError("empty hex value");
        std::size_t i = 0;
        for (auto it = h.rbegin(); it != h.rend(); ++it, i += 4) {
            if (!std::isxdigit(static_cast<unsigned char>(*it))) throw UsageError("bad hex value " + v);
            int d = std::stoi(std::string(1, *it), nullptr, 16);
            for (int k = 0; k < 4; ++k) put(i + k, d >> k & 1);
        }
        return out;
    }
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw UsageError("bad decimal value " + v);
    std::string digits = v;
    for (std::size_t i = 0; digits != "0" && !digits.empty(); ++i) {
        std::string q;
        int rem = 0;
        for (char c : digits) {
            int cur = rem * 10 + (c - '0');
            if (!q.empty() || cur / 2) q.push_back(static_cast<char>('0' + cur / 2));
            rem = cur % 2;
        }
        put(i, rem);
        digits = q.empty() ? "0" : q;
    }
    return out;
}

json format_value(const Bits& b) {
    if (b.size() <= 64) return from_bits(b);
    std::string h;
    for (std::size_t i = 0; i < b.size(); i += 4) {
        int d = 0;
        for (int k = 0; k < 4 && i + k < b.size(); ++k) d |= b[i + k] << k;
        h.push_back("0123456789abcdef"[d]);
    }
    while (h.size() > 1 && h.back() == '0') h.pop_back();
    std::reverse(h.begin(), h.end());
    return "0x" + h;
}

int resolve_n(int n, bool pad) {
    if (n < 4) throw UsageError("--n must be at least 4");
    int sq = AdderSpec::next_square(n);
    if (sq != n && !pad) throw UsageError("n=" + std::to_string(n) + " is not a perfect square; pass --pad-to-square");
    return sq;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text << "\n";
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

struct SimResult {
    Bits s;
    bool carry = false;
    bool clean = true;
};

// Runs a padded adder on values of `want` bits and folds the result back.
SimResult simulate(const AdderCircuit& ac, const TimedCircuit& full, const Bits& a, const Bits& b, int want, SimLevel level) {
    const int n = ac.spec.n;
    Bits pa(a), pb(b);
    pa.resize(n, false);
    pb.resize(n, false);
    auto st = run_bits(full, encode_inputs(ac.layout, pa, pb), level);
    auto r = read_outputs(ac.layout, st);
    SimResult out;
    out.s.assign(r.s.begin(), r.s.begin() + want);
    out.clean = r.ancillae_clean && r.a == pa;
    if (want == n) {
        out.carry = r.carry;
    } else {
        out.carry = r.s[want];
        for (int i = want + 1; i < n; ++i) out.clean = out.clean && !r.s[i];
        out.clean = out.clean && !r.carry;
    }
    return out;
}

std::vector<int> parse_list(const std::vector<std::string>& items) {
    std::vector<int> v;
    for (const auto& it : items) {
        std::stringstream ss(it);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                v.push_back(std::stoi(tok));
            } catch (...) {
                throw UsageError("bad integer " + tok);
            }
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D nearest-neighbour quantum adder: synthesis, verification, simulation, cost models"};
    app.require_subcommand(1);

    int n = 0;
    bool pad = false;
    std::string out_path, in_path, a_str = "0", b_str = "0", level_str = "block", format = "json";
    std::string ma, mb, metric_str = "depth", domain_str = "real";
    long bound = 100000;
    std::vector<std::string> n_list;
    std::vector<std::string> models;
    int samples = 0;
    unsigned seed = 1;

    auto* synth = app.add_subcommand("synth", "synthesize the full adder circuit as JSON");
    synth->add_option("--n", n, "register length")->required();
    synth->add_option("-o,--out", out_path, "output path (stdout if omitted)");
    synth->add_flag("--pad-to-square", pad, "round n up to the next perfect square");

    auto* verify_cmd = app.add_subcommand("verify", "check nearest-neighbour legality of a circuit JSON");
    verify_cmd->add_option("circuit", in_path, "circuit JSON file")->required();

    auto* sim = app.add_subcommand("sim", "simulate the adder on one input pair or on random samples");
    sim->add_option("--n", n, "register length")->required();
    sim->add_option("--a", a_str, "addend A (decimal or 0x hex)");
    sim->add_option("--b", b_str, "addend B (decimal or 0x hex)");
    sim->add_option("--level", level_str, "block or gate")->check(CLI::IsMember({"block", "gate"}));
    sim->add_option("--circuit", in_path, "simulate this circuit JSON instead of synthesizing");
    sim->add_option("--samples", samples, "run this many random pairs instead of --a/--b");
    sim->add_option("--seed", seed, "seed for --samples");
    sim->add_flag("--pad-to-square", pad, "round n up to the next perfect square");

    auto* compare = app.add_subcommand("compare", "emit depth, qubits and KQ of the cost models as CSV");
    compare->add_option("--n", n_list, "sizes, repeated or comma separated")->required();
    compare->add_option("--models", models, "model keys (default all)");

    auto* cross = app.add_subcommand("crossover", "smallest n from which model a beats model b");
    cross->add_option("--a", ma, "model key")->required();
    cross->add_option("--b", mb, "model key")->required();
    cross->add_option("--metric", metric_str, "depth, kq (exact depth*qubits) or kq-leading (tabulated leading term)")
        ->check(CLI::IsMember({"depth", "kq", "kq-leading"}));
    cross->add_option("--domain", domain_str, "real or square")->check(CLI::IsMember({"real", "square"}));
    cross->add_option("--bound", bound, "largest n scanned");

    auto* report = app.add_subcommand("report", "analytic versus measured depth table");
    report->add_option("--n", n_list, "sizes (default 4,16,64)");
    report->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    report->add_option("-o,--out", out_path, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*synth) {
            int padded = resolve_n(n, pad);
            auto spec = AdderSpec::make(padded);
            auto ac = synth_full(spec);
            json j = to_json(ac.full);
            j["n"] = padded;
            if (padded != n) j["requested_n"] = n;
            j["analytic_depth"] = analytic::full(spec.s);
            j["width"] = measured_width(ac.full);
            j["measured_depth"] = measured_depth(ac.full);
            write_out(out_path, j.dump());
            return 0;
        }

        if (*verify_cmd) {
            TimedCircuit c;
            try {
                c = circuit_from_json(read_json(in_path));
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            auto v = verify(c);
            for (const auto& x : v) std::cout << to_json(x).dump() << "\n";
            if (!v.empty()) return 1;
            std::cout << json{{"legal", true}, {"depth", depth(c)}, {"width", width(c)}}.dump() << "\n";
            return 0;
        }

        if (*sim) {
            int padded = resolve_n(n, pad);
            auto spec = AdderSpec::make(padded);
            auto ac = synth_full(spec);
            TimedCircuit full = ac.full;
            if (!in_path.empty()) {
                json j = read_json(in_path);
                if (j.contains("n") && j["n"].get<int>() != padded) throw UsageError("circuit file was built for a different n");
                full = circuit_from_json(j);
            }
            auto v = verify(full);
            if (!v.empty()) {
                for (const auto& x : v) std::cerr << to_json(x).dump() << "\n";
                return 1;
            }
            SimLevel level = level_str == "gate" ? SimLevel::GateClassical : SimLevel::Block;

            if (samples > 0) {
                std::vector<std::pair<Bits, Bits>> inputs;
                std::mt19937_64 rng(seed);
                for (int t = 0; t < samples; ++t) {
                    Bits a(n), b(n);
                    for (int i = 0; i < n; ++i) {
                        a[i] = rng() & 1;
                        b[i] = rng() & 1;
                    }
                    inputs.emplace_back(a, b);
                }
                std::vector<char> ok(samples, 0);
                parallel_for(inputs.size(), [&](std::size_t t) {
                    const auto& [a, b] = inputs[t];
                    auto r = simulate(ac, full, a, b, n, level);
                    Bits want(n);
                    bool c = false;
                    for (int i = 0; i < n; ++i) {
                        int x = a[i] + b[i] + c;
                        want[i] = x & 1;
                        c = x >> 1;
                    }
                    ok[t] = r.s == want && r.carry == c && r.clean;
                });
                int failures = static_cast<int>(std::count(ok.begin(), ok.end(), 0));
                std::cout << json{{"n", n}, {"samples", samples}, {"failures", failures}, {"workers", worker_count()}}.dump() << "\n";
                return failures == 0 ? 0 : 1;
            }

            auto r = simulate(ac, full, parse_value(a_str, n), parse_value(b_str, n), n, level);
            json j = {{"s", format_value(r.s)}, {"carry", r.carry ? 1 : 0}, {"ancillae_clean", r.clean}};
            if (padded != n) j["padded_n"] = padded;
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (*compare) {
            auto ns = parse_list(n_list);
            if (models.empty()) models = model_keys();
            std::cout << "model,n,depth,qubits,kq\n";
            bool ac_rows = false;
            for (const auto& key : models) {
                const DepthModel* m;
                try {
                    m = &model(key);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                ac_rows = ac_rows || m->arch == Arch::AC;
                for (int x : ns) {
                    if (x < 4) throw UsageError("model sizes start at n=4");
                    double d = x;
                    std::cout << m->name << "," << x << "," << m->depth(d) << "," << m->qubits(d) << "," << m->kq(d) << "\n";
                }
            }
            if (ac_rows) std::cerr << "note: AC-architecture depths count one-, two- and three-qubit gates and are not comparable with NTC depths\n";
            return 0;
        }

        if (*cross) {
            const DepthModel *a, *b;
            try {
                a = &model(ma);
                b = &model(mb);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (!a->comparable_with(*b)) throw UsageError("AC-architecture models are comparison-only; no crossover against NTC models");
            Metric metric = metric_str == "kq" ? Metric::KQ : metric_str == "kq-leading" ? Metric::KQLeading : Metric::Depth;
            Domain dom = domain_str == "square" ? Domain::PerfectSquares : Domain::RealSqrt;
            auto r = crossover(*a, *b, metric, dom, bound);
            auto sq = crossover(*a, *b, metric, Domain::PerfectSquares, bound);
            json j = {{"a", ma}, {"b", mb}, {"metric", metric_str}, {"domain", domain_str}, {"bound", bound}};
            j["n_star"] = r.n_star ? json(*r.n_star) : json(nullptr);
            j["n_star_perfect_square"] = sq.n_star ? json(*sq.n_star) : json(nullptr);
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (*report) {
            auto ns = n_list.empty() ? std::vector<int>{4, 16, 64} : parse_list(n_list);
            json rows = json::array();
            std::ostringstream csv;
            csv << "n,analytic_phase1,analytic_phase2,analytic_phase3,analytic_compute,analytic_full,"
                   "measured_phase1,measured_phase2,measured_phase3,measured_compute,measured_full,measured_width,ratio\n";
            for (int x : ns) {
                auto r = dual_accounting_report(AdderSpec::make(resolve_n(x, false)));
                rows.push_back(to_json(r));
                csv << r.n << "," << r.a_phase1 << "," << r.a_phase2 << "," << r.a_phase3 << "," << r.a_compute << ","
                    << r.a_full << "," << r.m_phase1 << "," << r.m_phase2 << "," << r.m_phase3 << "," << r.m_compute << ","
                    << r.m_full << "," << r.m_width << "," << r.ratio << "\n";
            }
            std::string text = format == "csv" ? csv.str() : rows.dump(2);
            if (format == "csv" && !text.empty()) text.pop_back();
            write_out(out_path, text);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailed& e) {
        for (const auto& x : e.violations) std::cerr << to_json(x).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
