#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "seqcolor/edge_coloring.hpp"
#include "seqcolor/graph.hpp"

namespace seqcolor {

/// Default size guard for the exhaustive engines.
inline constexpr int kOracleEdgeLimit = 20;

struct OracleOptions {
    bool override_size = false;
};

struct OracleResult {
    std::int64_t value = 0;
    EdgeColoring witness;
    std::uint64_t explored = 0;  // search nodes visited
    bool cap_stable = true;      // optimum unchanged when the color cap was raised by one
    int cap = 0;                 // largest color the final search could use
    std::vector<Vertex> sequential_vertices;  // max-sequential oracle only
};

using ColoringVisitor = std::function<void(const EdgeColoring&)>;

/// Visits every proper coloring of g with colors from {1..t} exactly once,
/// coloring edges in input order. Returns the number of colorings visited.
std::uint64_t enumerate_proper_colorings(const Graph& g, int t, const ColoringVisitor& visitor);

/// Σ'(G): minimum color sum over proper colorings. The color cap starts at
/// χ'(G) and is raised until the optimum survives one more color.
/// Throws OracleRefusal above kOracleEdgeLimit unless overridden.
OracleResult exact_edge_chromatic_sum(const Graph& g, OracleOptions options = {});

/// Maximum, over proper r-colorings, of the number of vertices v whose
/// palette is exactly {1..d(v)}. Throws ClassTwoError when no proper
/// r-coloring exists, OracleRefusal above the size guard.
OracleResult exact_max_sequential_set(const Graph& g, int r, OracleOptions options = {});

/// Every connected simple graph with at most max_edges edges, Δ >= 3 and
/// Δ - δ <= 1, one representative per isomorphism class, in a canonical
/// labelling with degrees non-increasing.
std::vector<Graph> small_near_regular_graphs(int max_edges);

}  // namespace seqcolor
