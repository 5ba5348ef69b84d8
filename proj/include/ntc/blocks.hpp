#pragma once

#include <string>
#include <vector>

#include "ntc/builder.hpp"
#include "ntc/circuit.hpp"

namespace ntc {

struct BlockNetlist {
    std::string name;
    std::vector<std::string> ports;
    std::vector<Coord> footprint;  // port -> relative coordinate at entry
    std::vector<Coord> exit;       // port -> relative coordinate at exit
    TimedCircuit circuit;
    int declared_depth = 0;

    int port(const std::string& p) const;
};

// Emitters used both for the standalone netlists and inside the adder.
namespace emit {
void half_adder(Builder& b, int a, int bq, int anc);
void gp(Builder& b, int a, int bq, int anc);
void full_adder(Builder& b, int cin, int a, int bq, int cout);
// Cells stacked [a, p, G, P] for the previous and the current cell.
void big_gp(Builder& b, int ap, int pp, int Gp, int Pp, int a, int p, int g, int P);
// Previous cell is a first-row cell [a, p, g] whose P equals its p.
void big_gp_first(Builder& b, int ap, int pp, int Gp, int a, int p, int g, int P);
void column_carry(Builder& b, int G, int P, int cin, int next);
void column_carry_last(Builder& b, int G, int P, int cin);
void carry(Builder& b, int a, int p, int G, int P, int c);
void carry1(Builder& b, int a, int p, int G, int c);
void sum(Builder& b, int Gp, int Pp, int a, int p);
void sum1(Builder& b, int G1, int c, int a2, int p2);
void sum2(Builder& b, int c, int p);
}  // namespace emit

BlockNetlist swap_netlist();
BlockNetlist ccnot_netlist();
BlockNetlist half_adder_netlist();
BlockNetlist full_adder_netlist();
BlockNetlist gp_netlist();
BlockNetlist big_gp_netlist();
BlockNetlist column_carry_netlist();
BlockNetlist carry_netlist();
BlockNetlist carry1_netlist();
BlockNetlist sum_netlist();
BlockNetlist sum1_netlist();
BlockNetlist sum2_netlist();

std::vector<BlockNetlist> all_blocks();

}  // namespace ntc
