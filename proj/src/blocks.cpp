#include "ntc/blocks.hpp"

#include <algorithm>
#include <functional>

namespace ntc {

int BlockNetlist::port(const std::string& p) const {
    auto it = std::find(ports.begin(), ports.end(), p);
    if (it == ports.end()) throw std::out_of_range(name + " has no port " + p);
    return static_cast<int>(it - ports.begin());
}

namespace emit {

void half_adder(Builder& b, int a, int bq, int anc) {
    b.ccx(a, bq, anc);
    b.cx(a, bq);
}

void gp(Builder& b, int a, int bq, int anc) { half_adder(b, a, bq, anc); }

void full_adder(Builder& b, int cin, int a, int bq, int cout) {
    b.ccx(a, bq, cout);
    b.cx(a, bq);
    b.swap(cin, a);
    b.ccx(cin, bq, cout);
    b.cx(cin, bq);
    b.swap(cin, a);
}

void big_gp(Builder& b, int ap, int pp, int Gp, int Pp, int a, int p, int g, int P) {
    b.swap(a, p);
    b.swap(Gp, Pp);
    b.swap(a, g);
    b.ccx(Gp, p, g);
    b.swap(Gp, Pp);
    b.swap(a, g);
    b.swap(pp, Gp);
    b.swap(p, a);
    b.swap(g, P);
    b.swap(Pp, a);
    b.ccx(Pp, p, P);
    b.swap(pp, Gp);
    b.swap(Pp, a);
    b.swap(g, P);
    (void)ap;
}

void big_gp_first(Builder& b, int ap, int pp, int Gp, int a, int p, int g, int P) {
    b.swap(Gp, a);
    b.ccx(Gp, p, g);
    b.swap(pp, a);
    b.swap(g, P);
    b.swap(pp, Gp);
    b.ccx(pp, p, P);
    b.swap(a, Gp);
    b.swap(P, g);
    b.swap(pp, a);
    b.swap(p, g);
    b.swap(Gp, pp);
    b.swap(g, p);
    (void)ap;
}

void column_carry(Builder& b, int G, int P, int cin, int next) {
    b.ccx(cin, P, G);
    b.swap(G, P);
    b.swap(G, cin);
    b.swap(G, next);
}

void column_carry_last(Builder& b, int G, int P, int cin) {
    b.ccx(cin, P, G);
    b.swap(G, P);
    b.swap(G, cin);
}

void carry(Builder& b, int a, int p, int G, int P, int c) {
    b.ccx(c, P, G);
    b.swap(c, P);
    b.swap(c, G);
    b.swap(c, p);
    b.swap(c, a);
}

void carry1(Builder& b, int a, int p, int G, int c) {
    b.swap(p, G);
    b.ccx(c, p, G);
    b.swap(p, G);
    (void)a;
}

void sum(Builder& b, int Gp, int Pp, int a, int p) {
    b.swap(Gp, Pp);
    b.swap(Gp, a);
    b.cx(Gp, p);
    b.swap(Gp, a);
    b.swap(Gp, Pp);
}

void sum1(Builder& b, int G1, int c, int a2, int p2) {
    b.swap(G1, c);
    b.swap(a2, p2);
    b.cx(G1, p2);
    b.swap(G1, c);
    b.swap(a2, p2);
}

void sum2(Builder& b, int c, int p) { b.cx(c, p); }

}  // namespace emit

namespace {

using Body = std::function<void(Builder&)>;

BlockNetlist make(std::string name, std::vector<std::string> ports, std::vector<Coord> fp, int declared, const Body& body) {
    int rows = 0, cols = 0;
    for (auto c : fp) {
        rows = std::max(rows, c.r + 1);
        cols = std::max(cols, c.c + 1);
    }
    Builder b(rows, cols, fp);
    body(b);
    BlockNetlist nl;
    nl.name = std::move(name);
    nl.ports = std::move(ports);
    nl.footprint = std::move(fp);
    for (int q = 0; q < b.qubits(); ++q) nl.exit.push_back(b.at(q));
    nl.circuit = b.all();
    nl.declared_depth = declared;
    return nl;
}

std::vector<Coord> column(int k) {
    std::vector<Coord> v;
    for (int r = 0; r < k; ++r) v.push_back({r, 0});
    return v;
}

}  // namespace

BlockNetlist swap_netlist() {
    return make("SWAP", {"x", "y"}, {{0, 0}, {0, 1}}, 3, [](Builder& b) { b.swap(0, 1); });
}

BlockNetlist ccnot_netlist() {
    return make("CCNOT", {"c1", "c2", "t"}, column(3), 9, [](Builder& b) { b.ccx(0, 1, 2); });
}

BlockNetlist half_adder_netlist() {
    return make("HA", {"a", "b", "anc"}, column(3), 10, [](Builder& b) { emit::half_adder(b, 0, 1, 2); });
}

BlockNetlist full_adder_netlist() {
    return make("FA", {"cin", "a", "b", "cout"}, column(4), 26, [](Builder& b) { emit::full_adder(b, 0, 1, 2, 3); });
}

BlockNetlist gp_netlist() {
    return make("gp", {"a", "b", "anc"}, column(3), 10, [](Builder& b) { emit::gp(b, 0, 1, 2); });
}

BlockNetlist big_gp_netlist() {
    return make("G,P", {"a_prev", "p_prev", "G_prev", "P_prev", "a", "p", "g", "P"}, column(8), 36,
                [](Builder& b) { emit::big_gp(b, 0, 1, 2, 3, 4, 5, 6, 7); });
}

BlockNetlist column_carry_netlist() {
    return make("Column_carry", {"G", "P", "c_in", "next"}, {{0, 0}, {1, 0}, {2, 0}, {2, 1}}, 18,
                [](Builder& b) { emit::column_carry(b, 0, 1, 2, 3); });
}

BlockNetlist carry_netlist() {
    return make("Carry", {"a", "p", "G", "P", "c_col"}, column(5), 21,
                [](Builder& b) { emit::carry(b, 0, 1, 2, 3, 4); });
}

BlockNetlist carry1_netlist() {
    return make("Carry1", {"a", "p", "G", "c_col"}, column(4), 15, [](Builder& b) { emit::carry1(b, 0, 1, 2, 3); });
}

BlockNetlist sum_netlist() {
    return make("SUM", {"G_prev", "P_prev", "a", "p"}, column(4), 13, [](Builder& b) { emit::sum(b, 0, 1, 2, 3); });
}

BlockNetlist sum1_netlist() {
    return make("SUM1", {"G1", "c_col", "a", "p"}, column(4), 7, [](Builder& b) { emit::sum1(b, 0, 1, 2, 3); });
}

BlockNetlist sum2_netlist() {
    return make("SUM2", {"c_col", "p"}, column(2), 1, [](Builder& b) { emit::sum2(b, 0, 1); });
}

std::vector<BlockNetlist> all_blocks() {
    return {swap_netlist(),   ccnot_netlist(),        half_adder_netlist(), full_adder_netlist(),
            gp_netlist(),     big_gp_netlist(),       column_carry_netlist(), carry_netlist(),
            carry1_netlist(), sum_netlist(),          sum1_netlist(),       sum2_netlist()};
}

}  // namespace ntc
