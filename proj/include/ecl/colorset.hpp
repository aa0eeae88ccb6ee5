#pragma once

#include <bitset>
#include <vector>

namespace ecl {

// Fixed-width color sets. All palettes in this project are k <= 128 colors;
// set operations on a two-word bitset are O(1), which matters in the TAA and
// chain-tracing inner loops.
constexpr int kMaxColors = 128;
using ColorSet = std::bitset<kMaxColors>;

inline ColorSet full_color_set(int k) {
    ColorSet s;
    for (int c = 0; c < k; ++c) s.set(c);
    return s;
}

inline std::vector<int> colors_of(const ColorSet& s, int k) {
    std::vector<int> out;
    for (int c = 0; c < k; ++c)
        if (s.test(c)) out.push_back(c);
    return out;
}

inline int first_color(const ColorSet& s, int k) {
    for (int c = 0; c < k; ++c)
        if (s.test(c)) return c;
    return -1;
}

} // namespace ecl
