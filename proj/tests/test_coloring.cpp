#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecl/coloring.hpp"
#include "ecl/oracles.hpp"
#include "ecl/rng.hpp"
#include "fixtures.hpp"

using namespace ecl;

namespace {

// greedy proper coloring with a generous palette; k = 2*Delta always succeeds
EdgeColoring random_proper_coloring(const Multigraph& g, uint64_t seed) {
    int k = std::max(2, 2 * stats(g).max_degree);
    EdgeColoring c(g, k);
    Rng rng(seed);
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    rng.shuffle(order);
    for (int e : order) {
        auto [u, v] = g.endpoints(e);
        ColorSet blocked = c.present(u) | c.present(v);
        std::vector<int> free;
        for (int col = 0; col < k; ++col)
            if (!blocked.test(col)) free.push_back(col);
        c.set(e, free[rng.below(free.size())]);
    }
    return c;
}

std::vector<int> all_vertices(const Multigraph& g) {
    std::vector<int> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) v[i] = i;
    return v;
}

} // namespace

TEST_CASE("validate_proper: K2 single color ok, P3 conflict at the middle") {
    Multigraph k2 = fixtures::k2();
    EdgeColoring c(k2, 1);
    c.set(0, 0);
    CHECK(validate_proper(c).ok);

    Multigraph p3 = fixtures::path(3);
    EdgeColoring c2(p3, 2);
    c2.force_set(0, 0);
    c2.force_set(1, 0);
    ProperReport r = validate_proper(c2);
    CHECK_FALSE(r.ok);
    CHECK(r.conflict_vertex == 1);
    CHECK(r.conflict_edge_a == 0);
    CHECK(r.conflict_edge_b == 1);
}

TEST_CASE("validate_proper accepts the exact oracle's FT(2) coloring") {
    Multigraph ft2 = fixtures::fat_triangle(2);
    ChiResult chi = exact_chromatic_index(ft2);
    REQUIRE(chi.exact);
    CHECK(chi.chi == 6);
    CHECK(validate_proper(*chi.witness).ok);
}

TEST_CASE("missing colors on K2") {
    Multigraph k2 = fixtures::k2();
    EdgeColoring c1(k2, 1);
    c1.set(0, 0);
    CHECK(c1.missing(0).none());
    EdgeColoring c3(k2, 3);
    c3.set(0, 0);
    CHECK(colors_of(c3.missing(0), 3) == std::vector<int>{1, 2});
}

TEST_CASE("missing set sizes in an FT(2) 5-triple follow the degrees") {
    Multigraph ft2 = fixtures::fat_triangle(2);
    // edge 0 joins vertices 0 and 1
    EdgeColoring c = make_k_triple_coloring(ft2, 0, 5, 1);
    CHECK(c.missing(0).count() == 2);
    CHECK(c.missing(1).count() == 2);
    CHECK(c.missing(2).count() == 1);
    // |phibar(v)| >= k - deg(v), equality when everything incident is colored
    for (int v = 0; v < 3; ++v) {
        int colored_deg = 0;
        for (int e : ft2.incident_edges(v))
            if (c.colored(e)) ++colored_deg;
        CHECK(static_cast<int>(c.missing(v).count()) == c.k() - colored_deg);
    }
}

TEST_CASE("boundary: FT(2) and whole-set") {
    Multigraph ft2 = fixtures::fat_triangle(2);
    std::vector<int> s01{0, 1};
    auto bnd = boundary(ft2, s01);
    CHECK(bnd.size() == 4);
    for (const auto& be : bnd) CHECK(be.out_end == 2);
    CHECK(boundary(ft2, all_vertices(ft2)).empty());
}

TEST_CASE("boundary: petersen outer cycle has five spokes") {
    Multigraph pet = fixtures::petersen();
    std::vector<int> outer{0, 1, 2, 3, 4};
    auto bnd = boundary(pet, outer);
    CHECK(bnd.size() == 5);
    for (const auto& be : bnd) CHECK(be.out_end == be.in_end + 5);
}

TEST_CASE("kempe chain: whole P3, degenerate vertex, C4 cycle") {
    Multigraph p3 = fixtures::path(3);
    EdgeColoring c(p3, 2);
    c.set(0, 0);
    c.set(1, 1);
    KempeChain chain = kempe_chain_at(c, 0, 0, 1);
    CHECK(chain.edges == std::vector<int>{0, 1});
    CHECK_FALSE(chain.cycle);
    CHECK(((chain.end_a == 0 && chain.end_b == 2) || (chain.end_a == 2 && chain.end_b == 0)));

    // vertex missing both colors: zero-edge chain
    EdgeColoring c2(p3, 4);
    c2.set(0, 2);
    c2.set(1, 3);
    KempeChain degenerate = kempe_chain_at(c2, 1, 0, 1);
    CHECK(degenerate.edges.empty());
    CHECK(degenerate.end_a == 1);
    CHECK(degenerate.end_b == 1);

    Multigraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    EdgeColoring cc(c4, 2);
    cc.set(0, 0);
    cc.set(1, 1);
    cc.set(2, 0);
    cc.set(3, 1);
    for (int v = 0; v < 4; ++v) {
        KempeChain cyc = kempe_chain_at(cc, v, 0, 1);
        CHECK(cyc.cycle);
        CHECK(cyc.edges.size() == 4);
    }
}

TEST_CASE("switch_chain: swaps the path and only the path") {
    Multigraph p3 = fixtures::path(3);
    EdgeColoring c(p3, 2);
    c.set(0, 0);
    c.set(1, 1);
    KempeChain chain = kempe_chain_at(c, 0, 0, 1);
    EdgeColoring sw = switch_chain(c, chain);
    CHECK(sw.color(0) == 1);
    CHECK(sw.color(1) == 0);
    CHECK(validate_proper(sw).ok);
}

TEST_CASE("switch_chain: stale chain detected") {
    Multigraph p3 = fixtures::path(3);
    EdgeColoring c(p3, 3);
    c.set(0, 0);
    c.set(1, 1);
    KempeChain chain = kempe_chain_at(c, 0, 0, 1);
    c.unset(0);
    c.set(0, 2);
    CHECK_THROWS_AS(switch_chain(c, chain), StaleChain);
}

TEST_CASE("kempe properties over a random corpus") {
    // switch is an involution preserving properness; chains at two vertices
    // are identical or vertex-disjoint
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(mix_seed(7, seed));
        Multigraph g =
            random_multigraph(3 + rng.below_int(4), 1 + rng.below_int(3), 10, rng.next());
        EdgeColoring c = random_proper_coloring(g, rng.next());
        int k = c.k();
        for (int probe = 0; probe < 20; ++probe) {
            int v = rng.below_int(g.vertex_count());
            int alpha = rng.below_int(k);
            int beta = (alpha + 1 + rng.below_int(k - 1)) % k;
            KempeChain chain = kempe_chain_at(c, v, alpha, beta);
            EdgeColoring once = switch_chain(c, chain);
            CHECK(validate_proper(once).ok);
            // the chain object stays valid for the reverse switch
            EdgeColoring twice = switch_chain(once, chain);
            CHECK(twice == c);
            // only chain edges changed
            std::set<int> chain_edges(chain.edges.begin(), chain.edges.end());
            for (int e = 0; e < g.edge_count(); ++e)
                if (!chain_edges.count(e)) CHECK(once.color(e) == c.color(e));
            // identical-or-disjoint
            int u = rng.below_int(g.vertex_count());
            KempeChain other = kempe_chain_at(c, u, alpha, beta);
            std::set<int> a_edges(chain.edges.begin(), chain.edges.end());
            std::set<int> b_edges(other.edges.begin(), other.edges.end());
            if (a_edges != b_edges) {
                std::set<int> averts{v}, bverts{u};
                for (int e : chain.edges) {
                    auto [x, y] = g.endpoints(e);
                    averts.insert(x);
                    averts.insert(y);
                }
                for (int e : other.edges) {
                    auto [x, y] = g.endpoints(e);
                    bverts.insert(x);
                    bverts.insert(y);
                }
                bool disjoint = true;
                for (int x : averts)
                    if (bverts.count(x)) disjoint = false;
                CHECK(disjoint);
            }
        }
    }
}

TEST_CASE("switch_outside_tree: whole graph is the identity; alpha==beta rejected") {
    Multigraph ft2 = fixtures::fat_triangle(2);
    EdgeColoring c = make_k_triple_coloring(ft2, 0, 5, 0);
    auto verts = all_vertices(ft2);
    ColorSet miss = c.missing_union(verts);
    int alpha = -1, beta = -1;
    for (int col = 0; col < 5; ++col)
        if (miss.test(col)) (alpha == -1 ? alpha : beta) = col;
    REQUIRE(beta != -1);
    EdgeColoring sw = switch_outside_tree(c, verts, alpha, beta);
    CHECK(sw == c);
    CHECK_THROWS(switch_outside_tree(c, verts, alpha, alpha));
}

TEST_CASE("switch_outside_tree: swaps the far component and keeps properness") {
    // FT(2) plus a disjoint path: T = the triangle block, closed vacuously
    Multigraph g(6);
    for (int r = 0; r < 2; ++r) {
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
    }
    int p1 = g.add_edge(3, 4);
    int p2 = g.add_edge(4, 5);
    EdgeColoring c(g, 5);
    c.set(1, 0);
    c.set(2, 1);
    c.set(3, 2);
    c.set(4, 3);
    c.set(5, 4);
    c.set(p1, 3);
    c.set(p2, 4);
    std::vector<int> tree{0, 1, 2};
    // phibar(T) covers all five colors here; 3 and 4 also sit on the far path
    ColorSet miss = c.missing_union(tree);
    REQUIRE(miss.test(3));
    REQUIRE(miss.test(4));
    EdgeColoring sw = switch_outside_tree(c, tree, 3, 4);
    CHECK(validate_proper(sw).ok);
    for (int e = 0; e < 6; ++e) CHECK(sw.color(e) == c.color(e)); // block untouched
    CHECK(sw.color(p1) == 4);
    CHECK(sw.color(p2) == 3);
}

TEST_CASE("switch_outside_tree: boundary color precondition enforced") {
    Multigraph p3 = fixtures::path(3);
    EdgeColoring c(p3, 4);
    c.set(0, 2);
    c.set(1, 1);
    std::vector<int> tree{0, 1};
    // color 1 sits on the boundary edge of {0,1}
    CHECK_THROWS(switch_outside_tree(c, tree, 1, 3));
}

TEST_CASE("legs: hand-traced P4 fixture has one leg exiting at the in-end") {
    Multigraph p4 = fixtures::path(4);
    EdgeColoring c(p4, 3);
    c.set(0, 1);
    c.set(1, 0);
    c.set(2, 1);
    std::vector<int> h{0, 1};
    auto legs = legs_of(c, h, 0, 1);
    REQUIRE(legs.size() == 1);
    CHECK(legs[0].exit_vertex == 1);
    CHECK(legs[0].far_vertex == 3);
    CHECK(legs[0].edges == std::vector<int>{1, 2});
    CHECK(interchangeable(c, h, 0, 1));
}

TEST_CASE("legs: empty boundary and whole vertex set give zero legs") {
    Multigraph ft2 = fixtures::fat_triangle(2);
    EdgeColoring c = make_k_triple_coloring(ft2, 0, 5, 0);
    auto verts = all_vertices(ft2);
    CHECK(legs_of(c, verts, 0, 1).empty());
    CHECK(interchangeable(c, verts, 0, 1));
}

TEST_CASE("b-closed predicates") {
    Multigraph p3 = fixtures::path(3);
    EdgeColoring c(p3, 4);
    c.set(0, 0);
    c.set(1, 1);
    std::vector<int> h{0, 1};
    ColorSet b1;
    b1.set(1);
    CHECK_FALSE(is_b_closed(c, h, b1)); // boundary edge colored 1
    ColorSet b0;
    b0.set(0);
    CHECK(is_b_closed(c, h, b0));
    // phibar(h) = {1,2,3}; (phibar - {1,2,3}) is empty, trivially closed
    ColorSet ball;
    ball.set(1);
    ball.set(2);
    ball.set(3);
    CHECK(is_b_minus_closed(c, h, ball));
    // (phibar - {2,3}) = {1} hits the boundary
    ColorSet b23;
    b23.set(2);
    b23.set(3);
    CHECK_FALSE(is_b_minus_closed(c, h, b23));
}
