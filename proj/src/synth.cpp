#include "ntc/synth.hpp"

#include "ntc/blocks.hpp"
#include "ntc/builder.hpp"

namespace ntc {

namespace {

std::vector<Coord> homes(const GridLayout& L) {
    std::vector<Coord> h;
    for (int q = 0; q < L.size(); ++q) h.push_back(L.home(q));
    return h;
}

std::vector<Coord> positions(const Builder& b) {
    std::vector<Coord> p;
    for (int q = 0; q < b.qubits(); ++q) p.push_back(b.at(q));
    return p;
}

class Synth {
public:
    explicit Synth(AdderCircuit& out) : out_(out), L(out.layout), b(L.rows(), L.cols(), homes(L)), s(L.spec().s) {}

    void run() {
        phase1();
        out_.phase1 = b.cut();
        out_.after_phase1 = positions(b);
        phase2();
        out_.phase2 = b.cut();
        out_.after_phase2 = positions(b);
        phase3_carry();
        out_.phase3_carry = b.cut();
        sums();
        out_.sum_flow = b.cut();
        out_.after_compute = positions(b);

        unsum();
        out_.unsum = b.cut();
        for (int i = 1; i <= L.spec().n; ++i) b.x(L.b(i));
        out_.not_layer = b.cut();
        for (int i = 1; i <= L.spec().n; ++i) b.cx(L.a(i), L.b(i));
        out_.cnot_layer = b.cut();
    }

private:
    int bit(int k, int j) const { return L.bit(k, j); }

    void phase1() {
        emit::half_adder(b, L.a(1), L.b(1), L.cell(1));
        for (int j = 2; j <= s; ++j) emit::full_adder(b, L.cell(j - 1), L.a(j), L.b(j), L.cell(j));
        // move column 1's carry out below column 2
        int c0 = L.cell(s);
        b.swap(c0, L.col_carry(1));
        b.swap(c0, L.col_carry(2));

        for (int k = 2; k <= s; ++k)
            for (int j = 1; j <= s; ++j) {
                int i = bit(k, j);
                emit::gp(b, L.a(i), L.b(i), L.cell(i));
            }
        for (int k = 2; k <= s; ++k)
            for (int j = 2; j <= s; ++j) {
                int i = bit(k, j), h = bit(k, j - 1);
                if (j == 2)
                    emit::big_gp_first(b, L.a(h), L.b(h), L.cell(h), L.a(i), L.b(i), L.cell(i), L.p(i));
                else
                    emit::big_gp(b, L.a(h), L.b(h), L.cell(h), L.p(h), L.a(i), L.b(i), L.cell(i), L.p(i));
            }
    }

    void phase2() {
        const int R = L.carry_row();
        int cin = L.cell(s);
        col_in_.assign(s + 1, -1);
        for (int k = 2; k <= s; ++k) {
            int i = bit(k, s);
            col_in_[k] = cin;
            if (k < s)
                emit::column_carry(b, L.cell(i), L.p(i), cin, b.qubit_at({R, k}));
            else
                emit::column_carry_last(b, L.cell(i), L.p(i), cin);
            cin = L.cell(i);
        }
        final_carry_ = cin;
    }

    // P_{j} <- P_{j} ^ p_{j} * P_{j-1} for a cell already passed by the column carry
    void clear_p(int above_P, int j, int k) {
        int i = bit(k, j);
        int a = L.a(i), p = L.b(i), G = L.cell(i), P = L.p(i);
        bool last = j == s;  // its G left with the column carry
        b.swap(a, p);
        if (!last) b.swap(G, P);
        b.swap(a, P);
        b.ccx(above_P, p, P);
        b.swap(a, P);
        b.swap(a, p);
        if (!last) b.swap(G, P);
    }

    void phase3_carry() {
        for (int k = 2; k <= s; ++k) {
            int c = col_in_[k];
            int is = bit(k, s);
            b.swap(c, L.p(is));
            b.swap(c, L.b(is));
            b.swap(c, L.a(is));
            for (int j = s - 1; j >= 2; --j) {
                int i = bit(k, j);
                emit::carry(b, L.a(i), L.b(i), L.cell(i), L.p(i), c);
                clear_p(L.p(i), j + 1, k);
            }
            // first row together with clearing P of the second row
            int i1 = bit(k, 1), i2 = bit(k, 2);
            int a1 = L.a(i1), p1 = L.b(i1), G1 = L.cell(i1);
            int a2 = L.a(i2), p2 = L.b(i2), G2 = L.cell(i2), P2 = L.p(i2);
            bool g2 = s > 2;
            b.swap(p1, G1);
            b.swap(a2, p2);
            if (g2) b.swap(G2, P2);
            b.swap(a1, G1);
            b.swap(p1, c);
            b.swap(a2, P2);
            b.ccx(p1, p2, P2);
            b.swap(a1, G1);
            b.swap(p1, c);
            b.swap(a2, P2);
            b.ccx(c, p1, G1);
            b.swap(p1, G1);
            b.swap(a2, p2);
            if (g2) b.swap(G2, P2);
        }
    }

    void sums() {
        for (int k = 2; k <= s; ++k) {
            for (int j = 3; j <= s; ++j) {
                int h = bit(k, j - 1), i = bit(k, j);
                emit::sum(b, L.cell(h), L.p(h), L.a(i), L.b(i));
            }
            int c = col_in_[k];
            int i1 = bit(k, 1), i2 = bit(k, 2);
            b.swap(L.cell(i1), c);
            b.swap(L.a(i2), L.b(i2));
            emit::sum2(b, c, L.b(i1));
            b.cx(L.cell(i1), L.b(i2));
            b.swap(L.cell(i1), c);
            b.swap(L.a(i2), L.b(i2));
        }
        b.cx(final_carry_, L.col_carry(s));
    }

    // column 1 holds sums after the ripple; turn them back into a xor b
    void unsum() {
        for (int j = 2; j <= s; ++j) {
            b.swap(L.cell(j - 1), L.a(j));
            b.cx(L.cell(j - 1), L.b(j));
            b.swap(L.cell(j - 1), L.a(j));
        }
    }

    AdderCircuit& out_;
    const GridLayout& L;
    Builder b;
    int s;
    std::vector<int> col_in_;
    int final_carry_ = -1;
};

}  // namespace

AdderCircuit synth_full(const AdderSpec& spec) {
    AdderCircuit ac(AdderSpec::make(spec.n));
    Synth(ac).run();
    ac.phase3 = concat(ac.phase3_carry, ac.sum_flow);
    ac.carry_flow = concat(concat(ac.phase1, ac.phase2), ac.phase3_carry);
    ac.compute = concat(ac.carry_flow, ac.sum_flow);

    Builder fin(ac.layout.rows(), ac.layout.cols(), homes(ac.layout));
    for (int i = 1; i <= spec.n; ++i) fin.x(ac.layout.b(i));
    ac.uncompute = concat(concat(concat(concat(ac.unsum, ac.not_layer), ac.cnot_layer), invert(ac.carry_flow)), fin.all());
    ac.full = concat(ac.compute, ac.uncompute);
    return ac;
}

TimedCircuit synth_phase1(const AdderSpec& spec, const GridLayout&) { return synth_full(spec).phase1; }
TimedCircuit synth_phase2(const AdderSpec& spec, const GridLayout&) { return synth_full(spec).phase2; }
TimedCircuit synth_phase3(const AdderSpec& spec, const GridLayout&) { return synth_full(spec).phase3; }

int column_carry_qubit(const GridLayout& L, int k) { return L.cell(L.bit(k, L.spec().s)); }

Bits to_bits(std::uint64_t v, int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b[i] = i < 64 && (v >> i & 1);
    return b;
}

std::uint64_t from_bits(const Bits& b) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < b.size() && i < 64; ++i)
        if (b[i]) v |= std::uint64_t(1) << i;
    return v;
}

BitState encode_inputs(const GridLayout& L, const Bits& a, const Bits& bb) {
    BitState st(L.rows(), L.cols());
    for (int i = 1; i <= L.spec().n; ++i) {
        st.set(L.at({RoleKind::A, i}), a.at(i - 1));
        st.set(L.at({RoleKind::B, i}), bb.at(i - 1));
    }
    return st;
}

AdderReadout read_outputs(const GridLayout& L, const BitState& st) {
    AdderReadout r;
    const int n = L.spec().n;
    r.a.resize(n);
    r.s.resize(n);
    for (int q = 0; q < L.size(); ++q) {
        const Role& role = L.role(q);
        bool v = st.get(L.home(q));
        if (role.kind == RoleKind::A) r.a[role.index - 1] = v;
        else if (role.kind == RoleKind::B) r.s[role.index - 1] = v;
        else if (role.kind == RoleKind::ColCarry && role.index == L.spec().s) r.carry = v;
        else if (v) r.ancillae_clean = false;
    }
    return r;
}

bool qubit_value(const BitState& st, const std::vector<Coord>& where, int q) { return st.get(where.at(q)); }

}  // namespace ntc
