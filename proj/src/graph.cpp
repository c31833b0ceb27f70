#include "seqcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cctype>
#include <queue>
#include <random>

#include "seqcolor/errors.hpp"

namespace seqcolor {

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    for (const auto& inc : incident(u)) {
        if (inc.neighbor == v) return inc.edge;
    }
    return std::nullopt;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                  std::optional<Bipartition> bipartition) {
    if (n < 0) throw GraphError(GraphErrc::invalid_parameter, "negative vertex count");

    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    g.edges_.reserve(edges.size());

    std::vector<std::pair<Vertex, Vertex>> seen;
    seen.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError(GraphErrc::vertex_out_of_range,
                             "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                 " has a vertex outside [0, " + std::to_string(n) + ")");
        }
        if (a == b) {
            throw GraphError(GraphErrc::loop_edge, "loop at vertex " + std::to_string(a));
        }
        seen.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw GraphError(GraphErrc::duplicate_edge, "duplicate edge " + std::to_string(dup->first) +
                                                        "-" + std::to_string(dup->second));
    }

    for (auto [u, v] : seen) {
        auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
        g.adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
    }

    if (bipartition) {
        std::vector<int> side(static_cast<std::size_t>(n), -1);
        auto mark = [&](const std::vector<Vertex>& part, int s) {
            for (Vertex v : part) {
                if (v < 0 || v >= n) {
                    throw GraphError(GraphErrc::bipartition_violated,
                                     "bipartition names unknown vertex " + std::to_string(v));
                }
                if (side[static_cast<std::size_t>(v)] != -1) {
                    throw GraphError(GraphErrc::bipartition_violated,
                                     "vertex " + std::to_string(v) + " listed twice in bipartition");
                }
                side[static_cast<std::size_t>(v)] = s;
            }
        };
        mark(bipartition->left, 0);
        mark(bipartition->right, 1);
        if (std::find(side.begin(), side.end(), -1) != side.end()) {
            throw GraphError(GraphErrc::bipartition_violated, "bipartition does not cover every vertex");
        }
        for (const auto& e : g.edges_) {
            if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
                throw GraphError(GraphErrc::bipartition_violated,
                                 "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " lies inside one part");
            }
        }
        std::sort(bipartition->left.begin(), bipartition->left.end());
        std::sort(bipartition->right.begin(), bipartition->right.end());
        g.bipartition_ = std::move(bipartition);
    }
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                  std::optional<Bipartition> bipartition) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                       std::move(bipartition));
}

bool same_edge_set(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto ea = a.edges();
    auto eb = b.edges();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
    if (g.bipartition()) return g.bipartition();
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (const auto& inc : g.incident(v)) {
                auto& sw = side[static_cast<std::size_t>(inc.neighbor)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    queue.push(inc.neighbor);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < n; ++v) {
        (side[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
    }
    return parts;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v)) {
            if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                seen[static_cast<std::size_t>(inc.neighbor)] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return reached == n;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.n = g.vertex_count();
    if (p.n == 0) return p;
    p.max_degree = 0;
    p.min_degree = g.degree(0);
    for (Vertex v = 0; v < p.n; ++v) {
        p.max_degree = std::max(p.max_degree, g.degree(v));
        p.min_degree = std::min(p.min_degree, g.degree(v));
    }
    p.r = p.max_degree;
    for (Vertex v = 0; v < p.n; ++v) {
        if (g.degree(v) == p.r) p.top_vertices.push_back(v);
    }
    p.n_r = static_cast<int>(p.top_vertices.size());
    p.near_regular = p.max_degree - p.min_degree <= 1;
    return p;
}

// graph6 -------------------------------------------------------------------

namespace {

constexpr int kGraph6Bias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("graph6: empty input");

    const int size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126) throw ParseError("graph6: multi-byte size form (n > 62) is not supported");
    if (size_byte < kGraph6Bias || size_byte > 125) {
        throw ParseError("graph6: malformed length byte " + std::to_string(size_byte));
    }
    const int n = size_byte - kGraph6Bias;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    std::string_view payload = text.substr(1);
    if (payload.size() < expected) throw ParseError("graph6: truncated payload");
    if (payload.size() > expected) throw ParseError("graph6: trailing characters after payload");

    std::vector<int> sextets;
    sextets.reserve(payload.size());
    for (char ch : payload) {
        int c = static_cast<unsigned char>(ch);
        if (c < kGraph6Bias || c > 126) {
            throw ParseError("graph6: payload byte " + std::to_string(c) + " out of range");
        }
        sextets.push_back(c - kGraph6Bias);
    }
    auto bit_at = [&](std::size_t k) { return (sextets[k / 6] >> (5 - k % 6)) & 1; };

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (bit_at(k)) edges.emplace_back(i, j);
        }
    }
    for (; k < expected * 6; ++k) {
        if (bit_at(k)) throw ParseError("graph6: non-canonical padding bits");
    }
    return build_graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices) {
        throw GraphError(GraphErrc::invalid_parameter,
                         "graph6 output supports at most 62 vertices, got " + std::to_string(n));
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    std::vector<int> sextets((bits + 5) / 6, 0);
    for (const auto& e : g.edges()) {
        // column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i
        std::size_t k = static_cast<std::size_t>(e.v) * static_cast<std::size_t>(e.v - 1) / 2 +
                        static_cast<std::size_t>(e.u);
        sextets[k / 6] |= 1 << (5 - k % 6);
    }
    std::string out;
    out.reserve(1 + sextets.size());
    out.push_back(static_cast<char>(n + kGraph6Bias));
    for (int s : sextets) out.push_back(static_cast<char>(s + kGraph6Bias));
    return out;
}

// edge list ----------------------------------------------------------------

namespace {

class TokenReader {
public:
    explicit TokenReader(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) return std::nullopt;
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int next_int(const char* what) {
        auto tok = next();
        if (!tok) throw ParseError(std::string("edge list: missing ") + what);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok->data(), tok->data() + tok->size(), value);
        if (ec != std::errc() || ptr != tok->data() + tok->size() || value < 0) {
            throw ParseError(std::string("edge list: bad ") + what + " '" + std::string(*tok) + "'");
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
    TokenReader in(text);
    const int n = in.next_int("vertex count");
    const int m = in.next_int("edge count");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = in.next_int("edge endpoint");
        int v = in.next_int("edge endpoint");
        edges.emplace_back(u, v);
    }
    if (in.next()) {
        throw ParseError("edge list: more edges than the header count " + std::to_string(m));
    }
    return build_graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    TokenReader in(text);
    auto first = in.next();
    if (!first) throw ParseError("empty graph input");
    bool numeric = std::all_of(first->begin(), first->end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return numeric ? parse_edge_list(text) : parse_graph6(text);
}

// generators ---------------------------------------------------------------

Graph generate_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) {
        throw GraphError(GraphErrc::invalid_parameter, "complete bipartite parts must be non-empty");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    Bipartition parts;
    for (Vertex x = 0; x < a; ++x) parts.left.push_back(x);
    for (Vertex y = a; y < a + b; ++y) parts.right.push_back(y);
    for (Vertex x = 0; x < a; ++x) {
        for (Vertex y = a; y < a + b; ++y) edges.emplace_back(x, y);
    }
    return build_graph(a + b, edges, std::move(parts));
}

namespace {

// Portable unbiased draw in [0, bound); the standard distributions are not
// reproducible across library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Graph generate_random_biregular(int r, int k, std::uint64_t seed) {
    if (r < 3) throw GraphError(GraphErrc::invalid_parameter, "biregular generator needs r >= 3");
    if (k < 1) throw GraphError(GraphErrc::invalid_parameter, "biregular generator needs k >= 1");

    const int nx = (r - 1) * k;
    const int ny = r * k;
    std::vector<Vertex> y_stubs;
    y_stubs.reserve(static_cast<std::size_t>(ny * (r - 1)));
    for (Vertex y = 0; y < ny; ++y) {
        for (int s = 0; s < r - 1; ++s) y_stubs.push_back(y);
    }

    std::mt19937_64 rng(seed);
    std::vector<char> used(static_cast<std::size_t>(nx * ny));
    for (int attempt = 0; attempt < kBiregularMaxAttempts; ++attempt) {
        for (std::size_t i = y_stubs.size(); i > 1; --i) {
            std::swap(y_stubs[i - 1], y_stubs[bounded(rng, i)]);
        }
        std::fill(used.begin(), used.end(), 0);
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(y_stubs.size());
        bool simple = true;
        for (std::size_t s = 0; s < y_stubs.size() && simple; ++s) {
            Vertex x = static_cast<Vertex>(s / static_cast<std::size_t>(r));
            Vertex y = y_stubs[s];
            auto& cell = used[static_cast<std::size_t>(x * ny + y)];
            if (cell) simple = false;
            cell = 1;
            edges.emplace_back(x, nx + y);
        }
        if (!simple) continue;

        Bipartition parts;
        for (Vertex x = 0; x < nx; ++x) parts.left.push_back(x);
        for (Vertex y = 0; y < ny; ++y) parts.right.push_back(nx + y);
        return build_graph(nx + ny, edges, std::move(parts));
    }
    throw GenerationError(seed, "no simple (" + std::to_string(r - 1) + "," + std::to_string(r) +
                                    ")-biregular pairing found in " +
                                    std::to_string(kBiregularMaxAttempts) + " attempts (seed " +
                                    std::to_string(seed) + ")");
}

Graph generate_regular_class1(int r, RegularFamily family) {
    if (r < 3) throw GraphError(GraphErrc::invalid_parameter, "regular generator needs r >= 3");
    if (family == RegularFamily::complete_bipartite) return generate_complete_bipartite(r, r);
    if ((r + 1) % 2 != 0) {
        throw GraphError(GraphErrc::invalid_parameter,
                         "K_" + std::to_string(r + 1) + " is Class 2; complete family needs r+1 even");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u <= r; ++u) {
        for (Vertex v = u + 1; v <= r; ++v) edges.emplace_back(u, v);
    }
    return build_graph(r + 1, edges);
}

}  // namespace seqcolor
