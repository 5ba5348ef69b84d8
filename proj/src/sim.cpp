#include "ntc/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

namespace ntc {

namespace {

struct ClassicalMachine {
    BitState s;
    std::vector<std::uint8_t> vpow;  // mod 4, odd means mid-superposition

    explicit ClassicalMachine(BitState in) : s(std::move(in)), vpow(s.bits.size(), 0) {}

    std::size_t at(Coord q) const { return static_cast<std::size_t>(q.r) * s.cols + q.c; }

    bool control(Coord q) const {
        if (vpow[at(q)] & 1) throw SimulationError("control qubit holds an unpaired V at (" + std::to_string(q.r) + "," + std::to_string(q.c) + ")");
        return s.get(q);
    }

    void add_v(Coord t, int k) {
        auto& v = vpow[at(t)];
        v = static_cast<std::uint8_t>((v + k + 4) & 3);
        if (v & 2) {  // V^2 = X
            s.set(t, !s.get(t));
            v &= 1;
        }
    }

    void apply(const TimedGate& g) {
        switch (g.kind) {
        case GateKind::NOT: s.set(g.q[0], !s.get(g.q[0])); break;
        case GateKind::U1: break;
        case GateKind::CNOT:
            if (control(g.q[0])) s.set(g.q[1], !s.get(g.q[1]));
            break;
        case GateKind::CV:
            if (control(g.q[0])) add_v(g.q[1], 1);
            break;
        case GateKind::CVDAG:
            if (control(g.q[0])) add_v(g.q[1], -1);
            break;
        case GateKind::SWAP: {
            bool a = s.get(g.q[0]), b = s.get(g.q[1]);
            s.set(g.q[0], b);
            s.set(g.q[1], a);
            std::swap(vpow[at(g.q[0])], vpow[at(g.q[1])]);
            break;
        }
        case GateKind::CCNOT:
            if (control(g.q[0]) && control(g.q[1])) s.set(g.q[2], !s.get(g.q[2]));
            break;
        }
    }
};

std::vector<Coord> resolve_order(const TimedCircuit& c, std::vector<Coord> order) {
    if (order.empty()) order = touched(c);
    return order;
}

// Amplitudes live in the rows of m; the gate acts from the left.
class AmpEngine {
public:
    explicit AmpEngine(const std::vector<Coord>& order) {
        for (std::size_t k = 0; k < order.size(); ++k) bit_[order[k]] = static_cast<int>(k);
        dim_ = Eigen::Index(1) << order.size();
    }

    Eigen::Index dim() const { return dim_; }

    void apply(Eigen::MatrixXcd& m, const TimedGate& g) const {
        switch (g.kind) {
        case GateKind::NOT: permute(m, -1, bit(g.q[0])); break;
        case GateKind::CNOT: permute(m, bit(g.q[0]), bit(g.q[1])); break;
        case GateKind::U1: {
            Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
            u(1, 1) = std::polar(1.0, g.theta);
            unitary(m, -1, bit(g.q[0]), u);
            break;
        }
        case GateKind::CV: unitary(m, bit(g.q[0]), bit(g.q[1]), v_matrix()); break;
        case GateKind::CVDAG: unitary(m, bit(g.q[0]), bit(g.q[1]), v_matrix().adjoint()); break;
        default:
            for (const auto& part : expand_gate(g)) apply(m, part);
        }
    }

private:
    int bit(Coord q) const {
        auto it = bit_.find(q);
        if (it == bit_.end()) throw SimulationError("gate touches a qubit outside the declared ordering");
        return it->second;
    }

    void permute(Eigen::MatrixXcd& m, int ctrl, int tgt) const {
        const Eigen::Index tb = Eigen::Index(1) << tgt;
        for (Eigen::Index i = 0; i < dim_; ++i) {
            if (i & tb) continue;
            if (ctrl >= 0 && !(i >> ctrl & 1)) continue;
            m.row(i).swap(m.row(i | tb));
        }
    }

    void unitary(Eigen::MatrixXcd& m, int ctrl, int tgt, const Eigen::Matrix2cd& u) const {
        const Eigen::Index tb = Eigen::Index(1) << tgt;
        for (Eigen::Index i = 0; i < dim_; ++i) {
            if (i & tb) continue;
            if (ctrl >= 0 && !(i >> ctrl & 1)) continue;
            Eigen::RowVectorXcd r0 = m.row(i);
            Eigen::RowVectorXcd r1 = m.row(i | tb);
            m.row(i) = u(0, 0) * r0 + u(0, 1) * r1;
            m.row(i | tb) = u(1, 0) * r0 + u(1, 1) * r1;
        }
    }

    std::map<Coord, int> bit_;
    Eigen::Index dim_ = 1;
};

}  // namespace

BitState run_bits(const TimedCircuit& c, BitState in, SimLevel level) {
    if (in.rows != c.rows || in.cols != c.cols) throw SimulationError("state grid does not match circuit grid");
    ClassicalMachine m(std::move(in));
    auto gates = in_time_order(level == SimLevel::GateClassical ? expand_macros(c) : c);
    for (const auto& g : gates) m.apply(g);
    for (std::size_t i = 0; i < m.vpow.size(); ++i)
        if (m.vpow[i] & 1) throw SimulationError("circuit leaves an unpaired controlled-V");
    return m.s;
}

Eigen::Matrix2cd v_matrix() {
    using cd = std::complex<double>;
    Eigen::Matrix2cd v;
    v << cd(1, 1), cd(1, -1), cd(1, -1), cd(1, 1);
    return v / 2.0;
}

AmpState run_amps(const TimedCircuit& c, std::uint64_t basis, std::vector<Coord> order) {
    order = resolve_order(c, std::move(order));
    if (static_cast<int>(order.size()) > kMaxAmpQubits)
        throw CapacityError("amplitude simulation limited to " + std::to_string(kMaxAmpQubits) + " qubits, got " + std::to_string(order.size()));
    AmpEngine e(order);
    if (basis >= static_cast<std::uint64_t>(e.dim())) throw std::out_of_range("basis index outside state space");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(e.dim(), 1);
    m(static_cast<Eigen::Index>(basis), 0) = 1.0;
    for (const auto& g : in_time_order(c)) e.apply(m, g);
    return {order, m.col(0)};
}

Eigen::MatrixXcd unitary_of(const TimedCircuit& c, std::vector<Coord> order) {
    order = resolve_order(c, std::move(order));
    if (static_cast<int>(order.size()) > kMaxUnitaryQubits)
        throw CapacityError("dense unitary limited to " + std::to_string(kMaxUnitaryQubits) + " qubits, got " + std::to_string(order.size()));
    AmpEngine e(order);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(e.dim(), e.dim());
    for (const auto& g : in_time_order(c)) e.apply(u, g);
    return u;
}

Eigen::MatrixXcd unitary_of(const BlockNetlist& b) { return unitary_of(b.circuit, b.footprint); }

int worker_count() {
    int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("NTC_ADDER_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(cap, hw);
    }
    return hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(worker_count())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = next++) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace ntc
