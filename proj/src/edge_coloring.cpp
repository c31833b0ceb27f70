#include "seqcolor/edge_coloring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "seqcolor/errors.hpp"

namespace seqcolor {

void require_total(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != static_cast<std::size_t>(g.edge_count())) {
        throw CoverageError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                            std::to_string(g.edge_count()) + " edges");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Color col = c[e];
        if (col < 1 || col > c.color_count) {
            const auto& ed = g.edge(e);
            throw CoverageError("edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) +
                                (col == 0 ? " is uncolored"
                                          : " has color " + std::to_string(col) + " outside 1.." +
                                                std::to_string(c.color_count)));
        }
    }
}

ProperVerdict verify_proper(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    ProperVerdict verdict;
    std::vector<int> seen(static_cast<std::size_t>(c.color_count) + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (const auto& inc : g.incident(v)) {
            if (++seen[static_cast<std::size_t>(c[inc.edge])] == 2) {
                verdict.violations.push_back({v, c[inc.edge]});
            }
        }
    }
    verdict.proper = verdict.violations.empty();
    return verdict;
}

ColorSet palette(const Graph& g, const EdgeColoring& c, Vertex v) {
    if (!g.contains(v)) throw PreconditionError({"unknown vertex " + std::to_string(v)});
    require_total(g, c);
    ColorSet s;
    for (const auto& inc : g.incident(v)) s.insert(c[inc.edge]);
    return s;
}

int colors_used(const EdgeColoring& c) {
    ColorSet s(c.colors.begin(), c.colors.end());
    s.erase(0);
    return static_cast<int>(s.size());
}

EdgeColoring compact_colors(const EdgeColoring& c) {
    ColorSet s(c.colors.begin(), c.colors.end());
    s.erase(0);
    std::map<Color, Color> relabel;
    Color next = 1;
    for (Color col : s) relabel[col] = next++;
    EdgeColoring out;
    out.color_count = static_cast<int>(s.size());
    out.colors.reserve(c.colors.size());
    for (Color col : c.colors) out.colors.push_back(col == 0 ? 0 : relabel[col]);
    return out;
}

namespace {

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Partial coloring with a per-vertex color -> edge table, shared by the
/// two recoloring constructions.
class ColorTable {
public:
    ColorTable(const Graph& g, int palette)
        : g_(g),
          palette_(palette),
          colors_(static_cast<std::size_t>(g.edge_count()), 0),
          at_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(palette + 1), -1) {}

    Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    EdgeId edge_at(Vertex v, Color c) const { return at_[slot(v, c)]; }
    bool is_free(Vertex v, Color c) const { return edge_at(v, c) == -1; }

    Color first_free(Vertex v) const {
        for (Color c = 1; c <= palette_; ++c) {
            if (is_free(v, c)) return c;
        }
        throw std::logic_error("no free color at vertex " + std::to_string(v));
    }

    void clear(EdgeId e) {
        Color c = color(e);
        if (c == 0) return;
        const auto& ed = g_.edge(e);
        at_[slot(ed.u, c)] = -1;
        at_[slot(ed.v, c)] = -1;
        colors_[static_cast<std::size_t>(e)] = 0;
    }

    void set(EdgeId e, Color c) {
        clear(e);
        const auto& ed = g_.edge(e);
        at_[slot(ed.u, c)] = e;
        at_[slot(ed.v, c)] = e;
        colors_[static_cast<std::size_t>(e)] = c;
    }

    /// Swaps colors a and b along the maximal a/b alternating path that
    /// leaves `start` on its a-colored edge.
    void flip_path(Vertex start, Color a, Color b) {
        if (a == b) return;
        std::vector<EdgeId> path;
        Vertex x = start;
        Color want = a;
        while (true) {
            EdgeId e = edge_at(x, want);
            if (e == -1) break;
            path.push_back(e);
            x = g_.edge(e).other(x);
            want = want == a ? b : a;
        }
        std::vector<Color> flipped;
        flipped.reserve(path.size());
        for (EdgeId e : path) flipped.push_back(color(e) == a ? b : a);
        for (EdgeId e : path) clear(e);
        for (std::size_t i = 0; i < path.size(); ++i) set(path[i], flipped[i]);
    }

    EdgeColoring result(int color_count) const { return {colors_, color_count}; }

private:
    std::size_t slot(Vertex v, Color c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_ + 1) +
               static_cast<std::size_t>(c);
    }

    const Graph& g_;
    int palette_;
    std::vector<Color> colors_;
    std::vector<EdgeId> at_;
};

}  // namespace

EdgeColoring misra_gries(const Graph& g) {
    const int delta = max_degree(g);
    ColorTable table(g, delta + 1);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Vertex u = g.edge(e).u;

        // Maximal fan at u starting from the uncolored edge e.
        std::vector<Vertex> fan{g.edge(e).v};
        std::vector<EdgeId> fan_edges{e};
        std::vector<char> in_fan(static_cast<std::size_t>(g.vertex_count()), 0);
        in_fan[static_cast<std::size_t>(fan[0])] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& inc : g.incident(u)) {
                Color c = table.color(inc.edge);
                if (c == 0 || in_fan[static_cast<std::size_t>(inc.neighbor)]) continue;
                if (table.is_free(fan.back(), c)) {
                    fan.push_back(inc.neighbor);
                    fan_edges.push_back(inc.edge);
                    in_fan[static_cast<std::size_t>(inc.neighbor)] = 1;
                    grew = true;
                    break;
                }
            }
        }

        const Color c = table.first_free(u);
        const Color d = table.first_free(fan.back());
        table.flip_path(u, d, c);

        // First fan vertex where d is free; the prefix up to it is still a fan.
        std::size_t w = 0;
        while (w < fan.size() && !table.is_free(fan[w], d)) ++w;
        if (w == fan.size()) throw std::logic_error("misra_gries: no fan vertex with free color");

        std::vector<Color> shifted;
        for (std::size_t i = 0; i < w; ++i) shifted.push_back(table.color(fan_edges[i + 1]));
        for (std::size_t i = 0; i <= w; ++i) table.clear(fan_edges[i]);
        for (std::size_t i = 0; i < w; ++i) table.set(fan_edges[i], shifted[i]);
        table.set(fan_edges[w], d);
    }
    return compact_colors(table.result(delta + 1));
}

EdgeColoring konig_color_bipartite(const Graph& g) {
    if (!find_bipartition(g)) throw PreconditionError({"graph is not bipartite"});
    const int delta = max_degree(g);
    ColorTable table(g, delta);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        Color a = table.first_free(ed.u);
        Color b = table.first_free(ed.v);
        if (!table.is_free(ed.v, a)) {
            // The a/b path from v cannot reach u in a bipartite graph, so
            // flipping it frees a at v while a stays free at u.
            table.flip_path(ed.v, a, b);
        }
        table.set(e, a);
    }
    return table.result(delta);
}

namespace {

class ChromaticSearch {
public:
    ChromaticSearch(const Graph& g, int t) : g_(g), t_(t) {
        order_.resize(static_cast<std::size_t>(g.edge_count()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            const auto& ea = g.edge(a);
            const auto& eb = g.edge(b);
            return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
        });
        used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        colors_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    }

    bool solve() { return extend(0, 0); }
    EdgeColoring witness() const { return {colors_, t_}; }

private:
    bool extend(std::size_t idx, Color max_used) {
        if (idx == order_.size()) return true;
        const EdgeId e = order_[idx];
        const auto& ed = g_.edge(e);
        auto& mu = used_[static_cast<std::size_t>(ed.u)];
        auto& mv = used_[static_cast<std::size_t>(ed.v)];
        const std::uint64_t blocked = mu | mv;
        // A fresh color is only tried as max_used + 1, which breaks the
        // symmetry between color permutations.
        const Color limit = std::min<Color>(t_, max_used + 1);
        for (Color c = 1; c <= limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (blocked & bit) continue;
            mu |= bit;
            mv |= bit;
            colors_[static_cast<std::size_t>(e)] = c;
            if (extend(idx + 1, std::max(max_used, c))) return true;
            mu &= ~bit;
            mv &= ~bit;
        }
        colors_[static_cast<std::size_t>(e)] = 0;
        return false;
    }

    const Graph& g_;
    int t_;
    std::vector<EdgeId> order_;
    std::vector<std::uint64_t> used_;
    std::vector<Color> colors_;
};

}  // namespace

ChromaticIndexResult exact_chromatic_index(const Graph& g, int max_colors) {
    const int delta = max_degree(g);
    if (max_colors < delta) {
        throw PreconditionError({"color cap " + std::to_string(max_colors) + " is below Δ = " +
                                 std::to_string(delta)});
    }
    if (max_colors > 62) throw PreconditionError({"color cap above 62 is not supported"});
    for (int t = delta; t <= max_colors; ++t) {
        ChromaticSearch search(g, t);
        if (search.solve()) return {t, search.witness()};
    }
    throw CapExceededError(max_colors + 1, "no proper coloring with at most " +
                                               std::to_string(max_colors) +
                                               " colors; chromatic index >= " +
                                               std::to_string(max_colors + 1));
}

ChromaticIndexResult exact_chromatic_index(const Graph& g) {
    return exact_chromatic_index(g, max_degree(g) + 1);
}

RColoring obtain_r_coloring(const Graph& g) {
    const int delta = max_degree(g);
    if (find_bipartition(g)) return {konig_color_bipartite(g), ColoringSource::konig};

    EdgeColoring mg = misra_gries(g);
    if (mg.color_count <= delta) {
        mg.color_count = delta;
        return {std::move(mg), ColoringSource::misra_gries};
    }

    if (g.edge_count() <= kExactSolverEdgeLimit) {
        auto exact = exact_chromatic_index(g, delta + 1);
        if (exact.chi_prime == delta) return {std::move(exact.witness), ColoringSource::exact};
        throw ClassTwoError("graph is Class 2: chromatic index " + std::to_string(exact.chi_prime) +
                            " exceeds Δ = " + std::to_string(delta));
    }
    throw UnknownClassError("Misra-Gries needed Δ+1 = " + std::to_string(delta + 1) +
                            " colors and " + std::to_string(g.edge_count()) +
                            " edges exceed the exact solver limit of " +
                            std::to_string(kExactSolverEdgeLimit));
}

std::string_view to_string(ColoringSource source) {
    switch (source) {
        case ColoringSource::konig: return "konig";
        case ColoringSource::misra_gries: return "misra-gries";
        case ColoringSource::exact: return "exact";
    }
    return "unknown";
}

std::string emit_coloring(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    std::string out = "t=" + std::to_string(c.color_count) + "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out += std::to_string(ed.u) + " " + std::to_string(ed.v) + " " + std::to_string(c[e]) + "\n";
    }
    return out;
}

namespace {

int parse_int(std::string_view tok, const std::string& line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("coloring: bad number in line '" + line + "'");
    }
    return value;
}

}  // namespace

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<int> count;
    EdgeColoring c;
    c.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);

    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::string> toks;
        for (std::string tok; fields >> tok;) toks.push_back(tok);
        if (toks.empty() || toks[0].starts_with('#')) continue;

        if (!count) {
            if (toks.size() != 1 || !toks[0].starts_with("t=")) {
                throw ParseError("coloring: expected header 't=<count>', got '" + line + "'");
            }
            count = parse_int(std::string_view(toks[0]).substr(2), line);
            if (*count < 0) throw ParseError("coloring: negative color count");
            continue;
        }
        if (toks.size() != 3) throw ParseError("coloring: expected 'u v c', got '" + line + "'");
        const int u = parse_int(toks[0], line);
        const int v = parse_int(toks[1], line);
        const int col = parse_int(toks[2], line);
        auto e = g.find_edge(u, v);
        if (!e) throw ParseError("coloring: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        if (col < 1 || col > *count) {
            throw ParseError("coloring: color " + std::to_string(col) + " outside 1.." +
                             std::to_string(*count));
        }
        auto& slot = c.colors[static_cast<std::size_t>(*e)];
        if (slot != 0) {
            throw ParseError("coloring: edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " listed twice");
        }
        slot = col;
    }
    if (!count) throw ParseError("coloring: missing 't=<count>' header");
    c.color_count = *count;
    require_total(g, c);
    return c;
}

}  // namespace seqcolor
