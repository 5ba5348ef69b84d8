#include "ntc/layout.hpp"

#include <cmath>

namespace ntc {

AdderSpec AdderSpec::make(int n) {
    if (n < 4) throw SpecError("n must be at least 4, got " + std::to_string(n));
    int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    if (s * s != n) throw SpecError("n must be a perfect square, got " + std::to_string(n));
    return {n, s};
}

int AdderSpec::next_square(int n) {
    int s = 2;
    while (s * s < n) ++s;
    return s * s;
}

const char* role_name(RoleKind k) {
    switch (k) {
    case RoleKind::A: return "A";
    case RoleKind::B: return "B";
    case RoleKind::Cell: return "Cell";
    case RoleKind::P: return "P";
    case RoleKind::ColCarry: return "ColCarry";
    }
    return "?";
}

std::pair<int, int> logical_cell(int i, const AdderSpec& spec) {
    if (i < 1 || i > spec.n) throw std::out_of_range("bit index " + std::to_string(i) + " outside 1.." + std::to_string(spec.n));
    int k = (i + spec.s - 1) / spec.s;
    return {k, i - (k - 1) * spec.s};
}

GridLayout::GridLayout(const AdderSpec& spec) : spec_(spec) {
    const int s = spec.s;
    rows_ = 4 * s;
    cols_ = s;
    const int R = rows_ - 1;

    const int base0 = R - 3 * s;
    for (int j = 1; j <= s; ++j) {
        int i = bit(1, j);
        int r = base0 + 3 * (j - 1);
        place({RoleKind::A, i}, {r, 0});
        place({RoleKind::B, i}, {r + 1, 0});
        place({RoleKind::Cell, i}, {r + 2, 0});
    }
    for (int k = 2; k <= s; ++k) {
        int c = k - 1;
        for (int j = 1; j <= s; ++j) {
            int i = bit(k, j);
            int r = j == 1 ? 0 : 4 * j - 5;
            place({RoleKind::A, i}, {r, c});
            place({RoleKind::B, i}, {r + 1, c});
            place({RoleKind::Cell, i}, {r + 2, c});
            if (j >= 2) place({RoleKind::P, i}, {r + 3, c});
        }
    }
    for (int k = 1; k <= s; ++k) place({RoleKind::ColCarry, k}, {R, k - 1});
}

void GridLayout::place(Role r, Coord c) {
    int q = static_cast<int>(roles_.size());
    roles_.push_back(r);
    homes_.push_back(c);
    by_role_[r] = q;
    by_coord_[c] = q;
}

int GridLayout::id(Role r) const {
    auto it = by_role_.find(r);
    if (it == by_role_.end())
        throw std::out_of_range(std::string("no qubit for role ") + role_name(r.kind) + "(" + std::to_string(r.index) + ")");
    return it->second;
}

std::optional<int> GridLayout::id_at(Coord c) const {
    auto it = by_coord_.find(c);
    if (it == by_coord_.end()) return std::nullopt;
    return it->second;
}

bool GridLayout::has_p(int i) const { return by_role_.count({RoleKind::P, i}) != 0; }

nlohmann::json GridLayout::to_json() const {
    nlohmann::json roles = nlohmann::json::array();
    for (int q = 0; q < size(); ++q) {
        nlohmann::json e = {{"role", role_name(roles_[q].kind)}, {"at", {homes_[q].r, homes_[q].c}}};
        e[roles_[q].kind == RoleKind::ColCarry ? "k" : "i"] = roles_[q].index;
        roles.push_back(std::move(e));
    }
    return {{"n", spec_.n}, {"rows", rows_}, {"cols", cols_}, {"roles", std::move(roles)}};
}

GridLayout build_layout(const AdderSpec& spec) { return GridLayout(spec); }

}  // namespace ntc
