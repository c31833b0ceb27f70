#pragma once

// Named graphs, random instance generators and brute-force reference
// oracles for the test suites. The oracles here enumerate raw color
// assignments with an odometer and check adjacency pairwise; they share no
// code with the library's search routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "seqcolor/graph.hpp"

namespace fixtures {

using seqcolor::Graph;
using seqcolor::Vertex;

inline Graph k4() { return seqcolor::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// K_{2,3} with X = {0,1} (x1, x2) and Y = {2,3,4} (y1, y2, y3); edges in
/// the order x1y1, x1y2, x1y3, x2y1, x2y2, x2y3.
inline Graph k23() { return seqcolor::generate_complete_bipartite(2, 3); }

inline Graph k33() { return seqcolor::generate_complete_bipartite(3, 3); }

inline Graph petersen() {
    return seqcolor::build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph cycle(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return seqcolor::build_graph(n, e);
}

inline Graph path(int edges) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
    return seqcolor::build_graph(edges + 1, e);
}

inline Graph star(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return seqcolor::build_graph(leaves + 1, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return seqcolor::build_graph(n, e);
}

/// C5 with chords 0-2 and 1-3: degrees (3,3,3,3,2), 7 edges on 5 vertices,
/// more than Δ·floor(n/2) = 6, so no proper 3-coloring exists.
inline Graph c5_two_chords() {
    return seqcolor::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    std::shuffle(e.begin(), e.end(), rng);
    return seqcolor::build_graph(n, e);
}

inline Graph random_bipartite(int a, int b, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (coin(rng)) e.emplace_back(i, a + j);
    std::shuffle(e.begin(), e.end(), rng);
    return seqcolor::build_graph(a + b, e);
}

/// Same graph with its edge list shuffled, so colorings built in edge
/// order come out differently.
inline Graph shuffled_edges(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& ed : g.edges()) e.emplace_back(ed.u, ed.v);
    std::shuffle(e.begin(), e.end(), rng);
    std::optional<seqcolor::Bipartition> bp = g.bipartition();
    return seqcolor::build_graph(g.vertex_count(), e, bp);
}

// Brute force ----------------------------------------------------------------

inline bool adjacent(const seqcolor::Edge& a, const seqcolor::Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

inline bool is_proper(const Graph& g, const std::vector<int>& colors) {
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j)
            if (colors[i] == colors[j] && adjacent(g.edge(i), g.edge(j))) return false;
    return true;
}

/// Calls f on every assignment in {1..t}^m (proper or not).
inline void for_each_assignment(int m, int t, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(static_cast<std::size_t>(m), 1);
    if (t < 1 && m > 0) return;
    while (true) {
        f(c);
        int i = 0;
        while (i < m && c[i] == t) c[i++] = 1;
        if (i == m) return;
        ++c[i];
    }
}

inline std::uint64_t brute_count_proper(const Graph& g, int t) {
    std::uint64_t count = 0;
    for_each_assignment(g.edge_count(), t, [&](const std::vector<int>& c) { count += is_proper(g, c); });
    return count;
}

inline int brute_chromatic_index(const Graph& g) {
    for (int t = 0;; ++t) {
        if (brute_count_proper(g, t) > 0) return t;
    }
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Minimum color sum. Colors above 2Δ-1 never help: such an edge has at
/// most 2Δ-2 neighbours and could move to a smaller free color.
inline std::int64_t brute_min_sum(const Graph& g) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    const int t = std::max(1, 2 * max_degree(g) - 1);
    for_each_assignment(g.edge_count(), t, [&](const std::vector<int>& c) {
        std::int64_t s = std::accumulate(c.begin(), c.end(), std::int64_t{0});
        if (s < best && is_proper(g, c)) best = s;
    });
    return best;
}

inline int brute_sequential_count(const Graph& g, const std::vector<int>& c) {
    int count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<int> s;
        for (const auto& inc : g.incident(v)) s.insert(c[inc.edge]);
        std::set<int> want;
        for (int i = 1; i <= g.degree(v); ++i) want.insert(i);
        count += s == want;
    }
    return count;
}

/// -1 when g has no proper r-coloring.
inline int brute_max_sequential(const Graph& g, int r) {
    int best = -1;
    for_each_assignment(g.edge_count(), r, [&](const std::vector<int>& c) {
        if (is_proper(g, c)) best = std::max(best, brute_sequential_count(g, c));
    });
    return best;
}

/// Canonical form over all n! relabellings: the lexicographically smallest
/// sorted edge list.
inline std::vector<std::pair<Vertex, Vertex>> brute_canonical(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Vertex, Vertex>> best;
    bool first = true;
    do {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (const auto& ed : g.edges()) {
            int a = perm[ed.u], b = perm[ed.v];
            e.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(e.begin(), e.end());
        if (first || e < best) best = e;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace fixtures
