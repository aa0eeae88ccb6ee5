#pragma once

#include <vector>

#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"

namespace fixtures {

// fat triangle: 3 vertices, every pair carrying `mu` parallel edges
inline ecl::Multigraph fat_triangle(int mu) {
    return ecl::fat_cycle(3, std::vector<int>(3, mu));
}

inline ecl::Multigraph petersen() {
    ecl::Multigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);    // outer cycle
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);          // spokes
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
    return g;
}

inline ecl::Multigraph triangle() { return ecl::fat_cycle(3, {1, 1, 1}); }

inline ecl::Multigraph path(int n) {
    ecl::Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline ecl::Multigraph k2() {
    ecl::Multigraph g(2);
    g.add_edge(0, 1);
    return g;
}

// 7-vertex edge-9-critical graph whose k-triples keep the maximal Tashkinov
// tree at {0,1,2}: a fat triangle wired to a dense 4-vertex block through a
// complete bipartite boundary. Delta=8, mu=2, omega=10, chi'=10.
inline ecl::Multigraph laddered_core() {
    ecl::Multigraph g(7);
    for (int r = 0; r < 2; ++r) {
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
    }
    for (int v = 0; v < 3; ++v)
        for (int w = 3; w < 7; ++w) g.add_edge(v, w);
    g.add_edge(3, 4);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(3, 5);
    g.add_edge(3, 6);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    g.add_edge(5, 6);
    return g;
}

// 9-triple coloring of laddered_core() - edge 0 whose maximal Tashkinov tree
// closes at {0,1,2}: colors 0..4 live inside the triangle block (and pair up
// with outside perfect matchings), colors 5..8 are near-perfect boundary
// matchings. Hand-checked proper; the tests re-verify.
inline ecl::EdgeColoring laddered_coloring(const ecl::Multigraph& g) {
    ecl::EdgeColoring c(g, 9);
    const int colors[28] = {
        // triangle block edges 0..5: 01,02,12,01,02,12; edge 0 stays open
        -1, 1, 3, 0, 2, 4,
        // boundary 6..17: 0-3,0-4,0-5,0-6, 1-3,1-4,1-5,1-6, 2-3,2-4,2-5,2-6
        8, 5, 6, 7, 7, 8, 5, 6, 6, 7, 8, 5,
        // outside block 18..27: 34,34,35,35,36,45,46,46,56,56
        0, 1, 2, 3, 4, 4, 2, 3, 0, 1};
    for (int e = 0; e < 28; ++e)
        if (colors[e] != -1) c.set(e, colors[e]);
    return c;
}

} // namespace fixtures
