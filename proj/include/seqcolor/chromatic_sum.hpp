#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcolor/edge_coloring.hpp"
#include "seqcolor/graph.hpp"
#include "seqcolor/oracle.hpp"
#include "seqcolor/sequentializer.hpp"

namespace seqcolor {

/// Σ'(G, c). Throws CoverageError if c is not total.
std::int64_t coloring_sum(const Graph& g, const EdgeColoring& c);

/// floor((2 n_r (2r-1) + n (r-1)(r^2+2r-2)) / (4r))
std::int64_t corollary2_bound(std::int64_t n, std::int64_t n_r, std::int64_t r);

/// The first, still-discrete step of the sum bound for a sequentialized
/// coloring in which `missing_top` vertices miss color r:
/// floor((n_r r(r+1) + s r(r-1) + (n - n_r - s)(r+2)(r-1)) / 4).
std::int64_t per_vertex_sum_bound(std::int64_t n, std::int64_t n_r, std::int64_t r,
                                  std::int64_t missing_top);

struct VertexGroup {
    std::vector<Vertex> vertices;
    std::int64_t sum = 0;  // total of their palette sums
};

/// Palette sums grouped the way the sum bound charges them, with r = Δ:
/// degree-r vertices, lower-degree vertices missing color r, and the rest.
struct SumDecomposition {
    int r = 0;
    std::vector<std::int64_t> vertex_sums;
    std::int64_t vertex_total = 0;  // Σ_v Σ_{i∈S(v)} i
    std::int64_t edge_sum = 0;      // Σ'(G, c); vertex_total == 2 * edge_sum
    VertexGroup full_palette;
    VertexGroup missing_top;
    VertexGroup other_deficient;
};

/// Throws PreconditionError if c is not proper.
SumDecomposition vertex_sum_decomposition(const Graph& g, const EdgeColoring& c);

struct SumReport {
    std::int64_t actual_sum = 0;
    std::int64_t bound = 0;
    std::int64_t per_vertex_bound = 0;
    std::optional<std::int64_t> exact_sum;
    std::optional<OracleResult> oracle;
    SumDecomposition decomposition;
    int r = 0;
    int n = 0;
    int n_r = 0;
    /// exact_sum <= actual_sum <= per_vertex_bound <= bound
    bool chain_holds = false;
};

/// Sum report for an existing certificate. The oracle runs only when asked
/// and the graph is within kOracleEdgeLimit.
SumReport sum_report(const Graph& g, const SequentialCertificate& cert, bool run_oracle);

/// Runs sequentialize first.
SumReport sum_report(const Graph& g, bool run_oracle);

}  // namespace seqcolor
