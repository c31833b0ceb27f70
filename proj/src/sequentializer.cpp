#include "seqcolor/sequentializer.hpp"

#include <algorithm>
#include <string>

#include "seqcolor/errors.hpp"

namespace seqcolor {

namespace {

std::vector<std::string> graph_preconditions(const DegreeProfile& p) {
    std::vector<std::string> violations;
    if (p.r < 3) violations.push_back("maximum degree " + std::to_string(p.r) + " is below 3");
    if (!p.near_regular) {
        violations.push_back("not near-regular: Δ - δ = " +
                             std::to_string(p.max_degree - p.min_degree) + " > 1");
    }
    return violations;
}

}  // namespace

MissingColorPartition missing_color_partition(const Graph& g, const EdgeColoring& alpha) {
    const auto profile = degree_profile(g);
    auto violations = graph_preconditions(profile);
    if (alpha.color_count != profile.r) {
        violations.push_back("coloring uses " + std::to_string(alpha.color_count) +
                             " colors, expected r = " + std::to_string(profile.r));
    }
    try {
        if (!verify_proper(g, alpha)) violations.push_back("coloring is not proper");
    } catch (const CoverageError& err) {
        violations.push_back(err.what());
    }
    if (!violations.empty()) throw PreconditionError(std::move(violations));

    MissingColorPartition p;
    p.r = profile.r;
    p.classes.resize(static_cast<std::size_t>(p.r));
    std::vector<char> present(static_cast<std::size_t>(p.r) + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::fill(present.begin(), present.end(), 0);
        for (const auto& inc : g.incident(v)) present[static_cast<std::size_t>(alpha[inc.edge])] = 1;
        for (Color i = 1; i <= p.r; ++i) {
            if (!present[static_cast<std::size_t>(i)]) p.classes[static_cast<std::size_t>(i - 1)].push_back(v);
        }
    }
    return p;
}

Color select_swap_color(const MissingColorPartition& p) {
    Color best = p.r;
    for (Color i = 1; i < p.r; ++i) {
        if (p.missing(i).size() > p.missing(best).size()) best = i;
    }
    return best;
}

EdgeColoring swap_colors(const EdgeColoring& alpha, Color i0, Color r) {
    if (r < 1 || i0 < 1 || i0 > r) {
        throw PreconditionError({"swap colors " + std::to_string(i0) + " and " + std::to_string(r) +
                                 " must satisfy 1 <= i0 <= r"});
    }
    if (alpha.color_count != r) {
        throw PreconditionError({"coloring has " + std::to_string(alpha.color_count) +
                                 " colors, expected " + std::to_string(r)});
    }
    EdgeColoring beta = alpha;
    for (Color& c : beta.colors) {
        if (c < 1 || c > r) throw PreconditionError({"color " + std::to_string(c) + " out of range"});
        if (c == r) {
            c = i0;
        } else if (c == i0) {
            c = r;
        }
    }
    return beta;
}

SequentialVerdict verify_sequential(const Graph& g, const EdgeColoring& c,
                                    std::span<const Vertex> R) {
    for (Vertex v : R) {
        if (!g.contains(v)) throw PreconditionError({"R contains unknown vertex " + std::to_string(v)});
    }
    require_total(g, c);
    SequentialVerdict verdict;
    for (Vertex v : R) {
        const int d = g.degree(v);
        std::vector<char> seen(static_cast<std::size_t>(d) + 1, 0);
        bool ok = true;
        for (const auto& inc : g.incident(v)) {
            Color col = c[inc.edge];
            if (col > d || seen[static_cast<std::size_t>(col)]) {
                ok = false;
                break;
            }
            seen[static_cast<std::size_t>(col)] = 1;
        }
        if (!ok) verdict.failing.push_back(v);
    }
    verdict.sequential = verdict.failing.empty();
    return verdict;
}

std::int64_t theorem3_bound(std::int64_t n, std::int64_t n_r, std::int64_t r) {
    const std::int64_t num = (r - 1) * n_r + n;
    return (num + r - 1) / r;
}

std::int64_t corollary1_bound(std::int64_t n, std::int64_t r) {
    const std::int64_t den = 2 * r - 1;
    return (r * n + den - 1) / den;
}

SequentialCertificate sequentialize(const Graph& g, std::optional<EdgeColoring> alpha) {
    const auto profile = degree_profile(g);
    if (auto violations = graph_preconditions(profile); !violations.empty()) {
        throw PreconditionError(std::move(violations));
    }

    SequentialCertificate cert;
    cert.injected = alpha.has_value();
    if (alpha) {
        cert.source_coloring = std::move(*alpha);
    } else {
        auto acquired = obtain_r_coloring(g);
        cert.source_coloring = std::move(acquired.coloring);
        cert.source = acquired.source;
    }

    const auto partition = missing_color_partition(g, cert.source_coloring);
    const Color i0 = select_swap_color(partition);

    cert.r = profile.r;
    cert.n = profile.n;
    cert.n_r = profile.n_r;
    cert.selected_color = i0;
    if (i0 != profile.r) cert.swap_color = i0;
    for (const auto& cls : partition.classes) cert.class_sizes.push_back(static_cast<int>(cls.size()));

    cert.R = profile.top_vertices;
    const auto& chosen = partition.missing(i0);
    cert.R.insert(cert.R.end(), chosen.begin(), chosen.end());
    std::sort(cert.R.begin(), cert.R.end());

    cert.coloring = swap_colors(cert.source_coloring, i0, profile.r);
    cert.bound = theorem3_bound(profile.n, profile.n_r, profile.r);
    cert.verified = verify_proper(g, cert.coloring).proper &&
                    verify_sequential(g, cert.coloring, cert.R).sequential;
    return cert;
}

}  // namespace seqcolor
