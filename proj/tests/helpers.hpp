#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ntc/synth.hpp"

namespace testing_helpers {

using ntc::Bits;

inline Bits random_bits(std::mt19937_64& rng, int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b[i] = rng() & 1;
    return b;
}

struct Sum {
    Bits s;
    bool carry = false;
    std::vector<bool> carries;  // carries[i] = carry into bit i (0-based), carries[n] = overflow
};

// Schoolbook binary addition.
inline Sum add(const Bits& a, const Bits& b) {
    Sum r;
    const std::size_t n = a.size();
    r.s.resize(n);
    r.carries.assign(n + 1, false);
    bool c = false;
    for (std::size_t i = 0; i < n; ++i) {
        r.carries[i] = c;
        int t = a[i] + b[i] + c;
        r.s[i] = t & 1;
        c = t >> 1;
    }
    r.carries[n] = c;
    r.carry = c;
    return r;
}

inline Bits invert_bits(Bits b) {
    b.flip();
    return b;
}

}  // namespace testing_helpers
