#include "seqcolor/chromatic_sum.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqcolor/errors.hpp"

namespace seqcolor {

std::int64_t coloring_sum(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    std::int64_t total = 0;
    for (Color col : c.colors) total += col;
    return total;
}

std::int64_t corollary2_bound(std::int64_t n, std::int64_t n_r, std::int64_t r) {
    const std::int64_t num = 2 * n_r * (2 * r - 1) + n * (r - 1) * (r * r + 2 * r - 2);
    return num / (4 * r);
}

std::int64_t per_vertex_sum_bound(std::int64_t n, std::int64_t n_r, std::int64_t r,
                                  std::int64_t missing_top) {
    const std::int64_t num = n_r * r * (r + 1) + missing_top * r * (r - 1) +
                             (n - n_r - missing_top) * (r + 2) * (r - 1);
    return num / 4;
}

SumDecomposition vertex_sum_decomposition(const Graph& g, const EdgeColoring& c) {
    if (!verify_proper(g, c)) throw PreconditionError({"coloring is not proper"});

    SumDecomposition d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.r = std::max(d.r, g.degree(v));
    d.edge_sum = coloring_sum(g, c);
    d.vertex_sums.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::int64_t s = 0;
        bool has_top = false;
        for (const auto& inc : g.incident(v)) {
            s += c[inc.edge];
            has_top = has_top || c[inc.edge] == d.r;
        }
        d.vertex_sums[static_cast<std::size_t>(v)] = s;
        d.vertex_total += s;

        VertexGroup& group = g.degree(v) == d.r ? d.full_palette
                             : !has_top         ? d.missing_top
                                                : d.other_deficient;
        group.vertices.push_back(v);
        group.sum += s;
    }
    if (d.vertex_total != 2 * d.edge_sum) {
        throw std::logic_error("vertex sums do not double-count the edge sum");
    }
    return d;
}

SumReport sum_report(const Graph& g, const SequentialCertificate& cert, bool run_oracle) {
    SumReport rep;
    rep.r = cert.r;
    rep.n = cert.n;
    rep.n_r = cert.n_r;
    rep.actual_sum = coloring_sum(g, cert.coloring);
    rep.bound = corollary2_bound(cert.n, cert.n_r, cert.r);
    rep.decomposition = vertex_sum_decomposition(g, cert.coloring);
    rep.per_vertex_bound =
        per_vertex_sum_bound(cert.n, cert.n_r, cert.r,
                             static_cast<std::int64_t>(rep.decomposition.missing_top.vertices.size()));
    if (run_oracle && g.edge_count() <= kOracleEdgeLimit) {
        rep.oracle = exact_edge_chromatic_sum(g);
        rep.exact_sum = rep.oracle->value;
    }
    rep.chain_holds = rep.actual_sum <= rep.per_vertex_bound && rep.per_vertex_bound <= rep.bound &&
                      (!rep.exact_sum || *rep.exact_sum <= rep.actual_sum);
    return rep;
}

SumReport sum_report(const Graph& g, bool run_oracle) {
    return sum_report(g, sequentialize(g), run_oracle);
}

}  // namespace seqcolor
