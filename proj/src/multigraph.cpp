#include "ecl/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ecl/rng.hpp"

namespace ecl {

GraphStats stats(const Multigraph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    std::map<std::pair<int, int>, int> pair_count;
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = g.endpoints(e);
        pair_count[{std::min(u, v), std::max(u, v)}]++;
    }
    for (int v = 0; v < s.n; ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
    for (auto& [pair, c] : pair_count) s.multiplicity = std::max(s.multiplicity, c);
    return s;
}

bool is_connected(const Multigraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

Multigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    Multigraph g;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!header_seen) {
            if (tok != "multigraph") throw ParseError(line_no, "expected 'multigraph <n>' header");
            long long n = -1;
            if (!(ls >> n) || n < 0) throw ParseError(line_no, "bad vertex count");
            header_seen = true;
            g = Multigraph(static_cast<int>(n));
            continue;
        }
        if (tok != "e") throw ParseError(line_no, "expected edge line 'e <u> <v>'");
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(line_no, "bad edge endpoints");
        if (u == v) throw ParseError(line_no, "loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw ParseError(line_no, "vertex index out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!header_seen) throw ParseError(line_no, "missing 'multigraph <n>' header");
    return g;
}

std::string emit_graph(const Multigraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto [a1, a2] = g.endpoints(a);
        auto [b1, b2] = g.endpoints(b);
        auto ka = std::make_pair(std::min(a1, a2), std::max(a1, a2));
        auto kb = std::make_pair(std::min(b1, b2), std::max(b1, b2));
        return ka < kb;
    });
    std::string out = "multigraph " + std::to_string(g.vertex_count()) + "\n";
    for (int e : order) {
        auto [u, v] = g.endpoints(e);
        out += "e " + std::to_string(std::min(u, v)) + " " + std::to_string(std::max(u, v)) + "\n";
    }
    return out;
}

Multigraph fat_cycle(int n, const std::vector<int>& mult) {
    if (n < 3) throw std::invalid_argument("fat_cycle needs n >= 3");
    if (static_cast<int>(mult.size()) != n)
        throw std::invalid_argument("fat_cycle needs one multiplicity per cycle pair");
    for (int m : mult)
        if (m < 1) throw std::invalid_argument("fat_cycle multiplicities must be >= 1");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < mult[i]; ++r) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph random_multigraph(int n, int mu_max, int edge_budget, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_multigraph needs n >= 2");
    if (mu_max < 1) throw std::invalid_argument("mu_max must be >= 1");
    if (edge_budget < n - 1) throw std::invalid_argument("edge budget below spanning tree size");
    Rng rng(seed);
    Multigraph g(n);
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    // random spanning tree: attach each vertex to a uniformly chosen earlier one
    for (int v = 1; v < n; ++v) {
        int u = rng.below_int(v);
        g.add_edge(u, v);
        mult[u][v]++;
        mult[v][u]++;
    }
    int m = n - 1;
    while (m < edge_budget) {
        std::vector<std::pair<int, int>> open;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (mult[u][v] < mu_max) open.emplace_back(u, v);
        if (open.empty()) break;
        auto [u, v] = open[rng.below(open.size())];
        g.add_edge(u, v);
        mult[u][v]++;
        mult[v][u]++;
        ++m;
    }
    return g;
}

std::vector<int> canonical_key(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical_key: brute force capped at n <= 10");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        mult[u][v]++;
        mult[v][u]++;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    std::vector<int> cur;
    cur.reserve(n * (n - 1) / 2 + 1);
    do {
        cur.clear();
        cur.push_back(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) cur.push_back(mult[perm[i]][perm[j]]);
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best.push_back(n);
    return best;
}

std::string canonical_key_string(const Multigraph& g) {
    std::string s;
    for (int v : canonical_key(g)) {
        s += std::to_string(v);
        s += ',';
    }
    return s;
}

namespace {

Multigraph key_to_graph(int n, const std::vector<int>& upper) {
    Multigraph g(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int r = 0; r < upper[idx]; ++r) g.add_edge(i, j);
            ++idx;
        }
    return g;
}

} // namespace

std::vector<Multigraph> enumerate_all(int n_bound, int mu_max) {
    if (n_bound < 2) throw std::invalid_argument("enumerate_all needs n_bound >= 2");
    if (n_bound > 6) throw std::invalid_argument("enumerate_all capped at n <= 6");
    if (mu_max < 1) throw std::invalid_argument("mu_max must be >= 1");
    std::vector<Multigraph> out;
    std::set<std::vector<int>> seen;
    for (int n = 2; n <= n_bound; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<int> upper(pairs, 0);
        while (true) {
            Multigraph g = key_to_graph(n, upper);
            if (g.edge_count() >= n - 1 && is_connected(g)) {
                auto key = canonical_key(g);
                if (seen.insert(key).second) {
                    // re-emit from the canonical key so output order is
                    // independent of the odometer path
                    std::vector<int> canon_upper(key.begin() + 1, key.end());
                    out.push_back(key_to_graph(n, canon_upper));
                }
            }
            int pos = 0;
            while (pos < pairs && upper[pos] == mu_max) upper[pos++] = 0;
            if (pos == pairs) break;
            upper[pos]++;
        }
    }
    return out;
}

} // namespace ecl
