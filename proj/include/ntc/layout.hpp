#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ntc/circuit.hpp"

namespace ntc {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AdderSpec {
    int n = 4;
    int s = 2;

    static AdderSpec make(int n);
    static int next_square(int n);
};

enum class RoleKind { A, B, Cell, P, ColCarry };

struct Role {
    RoleKind kind = RoleKind::A;
    int index = 1;  // bit index i for A/B/Cell/P, column k for ColCarry
    auto operator<=>(const Role&) const = default;
};

const char* role_name(RoleKind k);

// 1-based (k, j) of bit i
std::pair<int, int> logical_cell(int i, const AdderSpec& spec);

// Column k (1-based) sits in grid column k-1. Each column is a contiguous
// vertical strip of cells ordered [A, B, Cell, P]; cells without a P
// ancilla take three sites. Column 1 is bottom aligned so that its last
// cell ancilla touches the column-carry row underneath.
class GridLayout {
public:
    explicit GridLayout(const AdderSpec& spec);

    const AdderSpec& spec() const { return spec_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int carry_row() const { return rows_ - 1; }

    int size() const { return static_cast<int>(roles_.size()); }
    const Role& role(int q) const { return roles_[q]; }
    Coord home(int q) const { return homes_[q]; }
    int id(Role r) const;
    std::optional<int> id_at(Coord c) const;
    Coord at(Role r) const { return homes_[id(r)]; }

    bool has_p(int i) const;

    int a(int i) const { return id({RoleKind::A, i}); }
    int b(int i) const { return id({RoleKind::B, i}); }
    int cell(int i) const { return id({RoleKind::Cell, i}); }
    int p(int i) const { return id({RoleKind::P, i}); }
    int col_carry(int k) const { return id({RoleKind::ColCarry, k}); }

    int bit(int k, int j) const { return (k - 1) * spec_.s + j; }

    nlohmann::json to_json() const;

private:
    void place(Role r, Coord c);

    AdderSpec spec_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Role> roles_;
    std::vector<Coord> homes_;
    std::map<Role, int> by_role_;
    std::map<Coord, int> by_coord_;
};

GridLayout build_layout(const AdderSpec& spec);

}  // namespace ntc
