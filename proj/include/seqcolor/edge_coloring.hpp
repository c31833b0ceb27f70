#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqcolor/graph.hpp"

namespace seqcolor {

using Color = int;

/// Assignment of colors {1..color_count} to the edges of a host graph,
/// indexed by EdgeId. Color 0 marks an uncolored edge and makes the
/// coloring partial.
struct EdgeColoring {
    std::vector<Color> colors;
    int color_count = 0;

    Color operator[](EdgeId e) const { return colors.at(static_cast<std::size_t>(e)); }
    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// S(v, c): colors on the edges incident to v.
using ColorSet = std::set<Color>;

/// Throws CoverageError unless c assigns a color in {1..color_count} to
/// every edge of g.
void require_total(const Graph& g, const EdgeColoring& c);

struct ColorClash {
    Vertex vertex;
    Color color;
    friend bool operator==(const ColorClash&, const ColorClash&) = default;
};

struct ProperVerdict {
    bool proper = true;
    std::vector<ColorClash> violations;  // one entry per (vertex, repeated color)
    explicit operator bool() const noexcept { return proper; }
};

ProperVerdict verify_proper(const Graph& g, const EdgeColoring& c);

/// Throws if v is not a vertex of g or c does not cover g.
ColorSet palette(const Graph& g, const EdgeColoring& c, Vertex v);

/// Number of distinct colors actually appearing on edges.
int colors_used(const EdgeColoring& c);

/// Renumbers the colors in use to 1..k, preserving their relative order.
EdgeColoring compact_colors(const EdgeColoring& c);

/// Misra-Gries fan/path recoloring: a proper coloring with at most Δ+1
/// colors. Edges are colored in input order.
EdgeColoring misra_gries(const Graph& g);

/// Proper Δ-coloring of a bipartite graph by alternating-path recoloring.
/// Throws PreconditionError if g is not bipartite.
EdgeColoring konig_color_bipartite(const Graph& g);

struct ChromaticIndexResult {
    int chi_prime = 0;
    EdgeColoring witness;
};

/// Smallest t in [Δ, max_colors] admitting a proper t-coloring, by
/// backtracking over edges sorted by descending endpoint degree sum.
/// Throws CapExceededError when every t up to max_colors is infeasible.
ChromaticIndexResult exact_chromatic_index(const Graph& g, int max_colors);

/// max_colors defaults to Δ+1, which always suffices for simple graphs.
ChromaticIndexResult exact_chromatic_index(const Graph& g);

inline constexpr int kExactSolverEdgeLimit = 20;

enum class ColoringSource { konig, misra_gries, exact };

struct RColoring {
    EdgeColoring coloring;
    ColoringSource source = ColoringSource::konig;
};

/// A proper Δ(G)-coloring, tried in order: König when bipartite, Misra-Gries
/// when it happens to stay within Δ colors, then the exact solver when
/// |E| <= 20. Throws ClassTwoError or UnknownClassError otherwise.
RColoring obtain_r_coloring(const Graph& g);

std::string_view to_string(ColoringSource source);

/// "t=<count>" header followed by one "u v c" line per edge.
std::string emit_coloring(const Graph& g, const EdgeColoring& c);

/// Inverse of emit_coloring. Lines may come in any order; every edge of g
/// must appear exactly once.
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

}  // namespace seqcolor
