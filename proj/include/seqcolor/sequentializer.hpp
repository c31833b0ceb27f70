#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqcolor/edge_coloring.hpp"
#include "seqcolor/graph.hpp"

namespace seqcolor {

/// For each color i in 1..r, the vertices whose palette omits i. With
/// Δ-δ <= 1 and exactly r = Δ colors, each vertex of degree r-1 misses
/// exactly one color, so the classes partition V(G) \ V_r.
struct MissingColorPartition {
    int r = 0;
    std::vector<std::vector<Vertex>> classes;  // classes[i-1] = vertices missing color i

    const std::vector<Vertex>& missing(Color i) const {
        return classes.at(static_cast<std::size_t>(i - 1));
    }
};

/// Throws PreconditionError listing every failed condition: r >= 3,
/// near-regular, color_count == Δ, proper.
MissingColorPartition missing_color_partition(const Graph& g, const EdgeColoring& alpha);

/// Largest class. Ties prefer r (no recoloring needed), then the smallest
/// index.
Color select_swap_color(const MissingColorPartition& p);

/// Exchanges colors i0 and r everywhere; identity when i0 == r.
EdgeColoring swap_colors(const EdgeColoring& alpha, Color i0, Color r);

struct SequentialVerdict {
    bool sequential = true;
    std::vector<Vertex> failing;  // vertices of R whose palette is not {1..deg}
    explicit operator bool() const noexcept { return sequential; }
};

/// Checks palette(v) == {1..d(v)} for every v in R. Throws
/// PreconditionError for unknown vertices.
SequentialVerdict verify_sequential(const Graph& g, const EdgeColoring& c,
                                    std::span<const Vertex> R);

/// ceil(((r-1) n_r + n) / r)
std::int64_t theorem3_bound(std::int64_t n, std::int64_t n_r, std::int64_t r);

/// ceil(r n / (2r-1)), the same bound specialised to (r-1, r)-biregular
/// bipartite graphs.
std::int64_t corollary1_bound(std::int64_t n, std::int64_t r);

struct SequentialCertificate {
    EdgeColoring coloring;        // β, after the swap
    EdgeColoring source_coloring; // α, before the swap
    ColoringSource source = ColoringSource::konig;
    bool injected = false;        // α was supplied by the caller
    std::vector<Vertex> R;        // V_r ∪ V_α(i0), ascending
    std::optional<Color> swap_color;  // i0, or empty when i0 == r
    Color selected_color = 0;     // i0 including the no-swap case
    std::vector<int> class_sizes; // |V_α(i)| for i = 1..r
    std::int64_t bound = 0;
    int r = 0;
    int n = 0;
    int n_r = 0;
    bool verified = false;

    bool bound_met() const noexcept { return static_cast<std::int64_t>(R.size()) >= bound; }
};

/// Full construction: acquire (or accept) a proper r-coloring, partition by
/// missing color, pick i0, swap, and verify R-sequentiality of the result.
/// Throws PreconditionError, ClassTwoError or UnknownClassError.
SequentialCertificate sequentialize(const Graph& g,
                                    std::optional<EdgeColoring> alpha = std::nullopt);

}  // namespace seqcolor
