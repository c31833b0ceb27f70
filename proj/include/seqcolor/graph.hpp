#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqcolor {

using Vertex = int;
using EdgeId = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Bipartition {
    std::vector<Vertex> left;   // X
    std::vector<Vertex> right;  // Y
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges keep their insertion order, which is the order every algorithm in
/// the library walks them in.
class Graph {
public:
    Graph() = default;

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    std::span<const Incidence> incident(Vertex v) const {
        return adjacency_.at(static_cast<std::size_t>(v));
    }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }

    /// Edge joining u and v, if any.
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

private:
    friend Graph build_graph(int, std::span<const std::pair<Vertex, Vertex>>,
                             std::optional<Bipartition>);

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::optional<Bipartition> bipartition_;
};

/// Validates and builds a graph. Throws GraphError on loops, duplicate
/// edges, out-of-range ids, or a bipartition that is not a partition of
/// V(G) or that some edge does not cross.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                  std::optional<Bipartition> bipartition = std::nullopt);

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                  std::optional<Bipartition> bipartition = std::nullopt);

/// True when both graphs have the same vertex count and the same edge set.
bool same_edge_set(const Graph& a, const Graph& b);

/// A proper 2-coloring of the vertices, if one exists. Uses the stored
/// bipartition when present.
std::optional<Bipartition> find_bipartition(const Graph& g);

bool is_connected(const Graph& g);

struct DegreeProfile {
    int n = 0;
    int max_degree = 0;
    int min_degree = 0;
    int r = 0;  // color count used by the sequentializer, equal to max_degree
    int n_r = 0;
    std::vector<Vertex> top_vertices;  // V_r, ascending
    bool near_regular = true;
};

DegreeProfile degree_profile(const Graph& g);

// Serialization ------------------------------------------------------------

inline constexpr int kGraph6MaxVertices = 62;

/// Parses a graph6 string (single-byte size form, n <= 62). A trailing
/// newline is accepted. Throws ParseError.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding. Throws GraphError when n > 62.
std::string emit_graph6(const Graph& g);

/// Parses "n m" followed by m pairs "u v".
Graph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

/// Accepts either format: edge list if the first token is a decimal number,
/// graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

// Generators ---------------------------------------------------------------

/// K_{a,b}: X = {0..a-1}, Y = {a..a+b-1}; the bipartition is recorded.
Graph generate_complete_bipartite(int a, int b);

inline constexpr int kBiregularMaxAttempts = 10000;

/// Random (r-1, r)-biregular bipartite graph with |X| = (r-1)k vertices of
/// degree r and |Y| = rk vertices of degree r-1. Configuration model with
/// full resampling whenever a multi-edge appears.
Graph generate_random_biregular(int r, int k, std::uint64_t seed);

enum class RegularFamily { complete_bipartite, complete };

/// r-regular Class 1 graph: K_{r,r} by default, K_{r+1} when requested
/// (r+1 must be even).
Graph generate_regular_class1(int r, RegularFamily family = RegularFamily::complete_bipartite);

}  // namespace seqcolor
