#include "seqcolor/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "seqcolor/errors.hpp"

namespace seqcolor {

namespace {

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

void guard_size(const Graph& g, const OracleOptions& options, const char* what) {
    if (!options.override_size && g.edge_count() > kOracleEdgeLimit) {
        throw OracleRefusal(std::string(what) + ": " + std::to_string(g.edge_count()) +
                            " edges exceed the exhaustive-search limit of " +
                            std::to_string(kOracleEdgeLimit) + " (override to force)");
    }
}

void guard_cap(int t) {
    if (t > 62) throw PreconditionError({"color cap above 62 is not supported"});
}

using Mask = std::uint64_t;

constexpr Mask bit(Color c) { return Mask{1} << c; }

Color smallest_absent(Mask m) {
    Color c = 1;
    while (m & bit(c)) ++c;
    return c;
}

class Enumerator {
public:
    Enumerator(const Graph& g, int t, const ColoringVisitor& visitor)
        : g_(g), t_(t), visitor_(visitor) {
        used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        coloring_.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
        coloring_.color_count = t;
    }

    std::uint64_t run() {
        extend(0);
        return visits_;
    }

private:
    void extend(EdgeId e) {
        if (e == g_.edge_count()) {
            ++visits_;
            if (visitor_) visitor_(coloring_);
            return;
        }
        const auto& ed = g_.edge(e);
        Mask& mu = used_[static_cast<std::size_t>(ed.u)];
        Mask& mv = used_[static_cast<std::size_t>(ed.v)];
        for (Color c = 1; c <= t_; ++c) {
            if ((mu | mv) & bit(c)) continue;
            mu |= bit(c);
            mv |= bit(c);
            coloring_.colors[static_cast<std::size_t>(e)] = c;
            extend(e + 1);
            mu &= ~bit(c);
            mv &= ~bit(c);
        }
        coloring_.colors[static_cast<std::size_t>(e)] = 0;
    }

    const Graph& g_;
    int t_;
    const ColoringVisitor& visitor_;
    std::vector<Mask> used_;
    EdgeColoring coloring_;
    std::uint64_t visits_ = 0;
};

/// Branch and bound for the minimum color sum with colors <= cap.
class MinSumSearch {
public:
    MinSumSearch(const Graph& g, int cap) : g_(g), cap_(cap) {
        used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        colors_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    }

    /// Returns false when no proper coloring with colors <= cap exists.
    bool run() {
        extend(0, 0);
        return best_ != kNone;
    }

    std::int64_t best() const { return best_; }
    const std::vector<Color>& witness() const { return witness_; }
    std::uint64_t explored() const { return explored_; }

private:
    static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

    // Every uncolored edge ends up at least at the smallest color free at
    // both of its endpoints right now.
    std::int64_t remaining_lower_bound(EdgeId from) const {
        std::int64_t lb = 0;
        for (EdgeId e = from; e < g_.edge_count(); ++e) {
            const auto& ed = g_.edge(e);
            lb += smallest_absent(used_[static_cast<std::size_t>(ed.u)] |
                                  used_[static_cast<std::size_t>(ed.v)]);
        }
        return lb;
    }

    void extend(EdgeId e, std::int64_t partial) {
        ++explored_;
        if (e == g_.edge_count()) {
            if (partial < best_) {
                best_ = partial;
                witness_ = colors_;
            }
            return;
        }
        if (best_ != kNone && partial + remaining_lower_bound(e) >= best_) return;

        const auto& ed = g_.edge(e);
        Mask& mu = used_[static_cast<std::size_t>(ed.u)];
        Mask& mv = used_[static_cast<std::size_t>(ed.v)];
        for (Color c = 1; c <= cap_; ++c) {
            if ((mu | mv) & bit(c)) continue;
            if (best_ != kNone && partial + c >= best_) break;
            mu |= bit(c);
            mv |= bit(c);
            colors_[static_cast<std::size_t>(e)] = c;
            extend(e + 1, partial + c);
            mu &= ~bit(c);
            mv &= ~bit(c);
        }
        colors_[static_cast<std::size_t>(e)] = 0;
    }

    const Graph& g_;
    int cap_;
    std::vector<Mask> used_;
    std::vector<Color> colors_;
    std::vector<Color> witness_;
    std::int64_t best_ = kNone;
    std::uint64_t explored_ = 0;
};

/// Maximises the count of vertices whose incident colors all stay within
/// their degree; in a proper coloring that is exactly palette = {1..d(v)}.
class MaxSequentialSearch {
public:
    MaxSequentialSearch(const Graph& g, int r) : g_(g), r_(r) {
        used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        excess_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        colors_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    }

    bool run() {
        extend(0);
        return best_ >= 0;
    }

    int best() const { return best_; }
    const std::vector<Color>& witness() const { return witness_; }
    std::uint64_t explored() const { return explored_; }

private:
    void extend(EdgeId e) {
        ++explored_;
        const int alive = g_.vertex_count() - dead_;
        if (alive <= best_) return;
        if (e == g_.edge_count()) {
            best_ = alive;
            witness_ = colors_;
            return;
        }
        const auto& ed = g_.edge(e);
        Mask& mu = used_[static_cast<std::size_t>(ed.u)];
        Mask& mv = used_[static_cast<std::size_t>(ed.v)];
        for (Color c = 1; c <= r_; ++c) {
            if ((mu | mv) & bit(c)) continue;
            mu |= bit(c);
            mv |= bit(c);
            colors_[static_cast<std::size_t>(e)] = c;
            mark(ed.u, c, +1);
            mark(ed.v, c, +1);
            extend(e + 1);
            mark(ed.u, c, -1);
            mark(ed.v, c, -1);
            mu &= ~bit(c);
            mv &= ~bit(c);
            if (best_ == g_.vertex_count()) break;
        }
        colors_[static_cast<std::size_t>(e)] = 0;
    }

    void mark(Vertex v, Color c, int delta) {
        if (c <= g_.degree(v)) return;
        int& x = excess_[static_cast<std::size_t>(v)];
        if (delta > 0 && x++ == 0) ++dead_;
        if (delta < 0 && --x == 0) --dead_;
    }

    const Graph& g_;
    int r_;
    std::vector<Mask> used_;
    std::vector<int> excess_;  // incident edges colored above d(v)
    int dead_ = 0;
    std::vector<Color> colors_;
    std::vector<Color> witness_;
    int best_ = -1;
    std::uint64_t explored_ = 0;
};

}  // namespace

std::uint64_t enumerate_proper_colorings(const Graph& g, int t, const ColoringVisitor& visitor) {
    guard_cap(t);
    return Enumerator(g, std::max(t, 0), visitor).run();
}

OracleResult exact_edge_chromatic_sum(const Graph& g, OracleOptions options) {
    guard_size(g, options, "exact edge-chromatic sum");
    OracleResult result;
    result.witness.color_count = 0;
    if (g.edge_count() == 0) return result;

    int cap = exact_chromatic_index(g).chi_prime;
    auto solve = [&](int c) {
        guard_cap(c);
        MinSumSearch search(g, c);
        search.run();
        result.explored += search.explored();
        return std::pair{search.best(), search.witness()};
    };
    auto [value, witness] = solve(cap);
    while (true) {
        auto [wider_value, wider_witness] = solve(cap + 1);
        if (wider_value >= value) break;
        value = wider_value;
        witness = std::move(wider_witness);
        ++cap;
    }
    result.value = value;
    result.cap = cap;
    result.cap_stable = true;
    result.witness = {std::move(witness), cap};
    return result;
}

OracleResult exact_max_sequential_set(const Graph& g, int r, OracleOptions options) {
    guard_size(g, options, "exact max sequential set");
    guard_cap(r);
    if (r < max_degree(g)) {
        throw ClassTwoError("no proper " + std::to_string(r) + "-coloring: Δ = " +
                            std::to_string(max_degree(g)));
    }
    MaxSequentialSearch search(g, r);
    OracleResult result;
    if (!search.run()) {
        throw ClassTwoError("no proper " + std::to_string(r) + "-coloring exists");
    }
    result.value = search.best();
    result.witness = {search.witness(), r};
    result.explored = search.explored();
    result.cap = r;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (const auto& inc : g.incident(v)) ok = ok && result.witness[inc.edge] <= g.degree(v);
        if (ok) result.sequential_vertices.push_back(v);
    }
    return result;
}

// Small graph enumeration ---------------------------------------------------

namespace {

class NearRegularEnumerator {
public:
    NearRegularEnumerator(int n, int r, int max_edges) : n_(n), r_(r), max_edges_(max_edges) {
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
        }
        degree_.assign(static_cast<std::size_t>(n), 0);
    }

    void run(std::set<std::pair<int, Mask>>& found) {
        found_ = &found;
        extend(0);
    }

private:
    int pair_index(Vertex i, Vertex j) const { return j * (j - 1) / 2 + i; }

    void extend(std::size_t p) {
        // Row i is complete once every pair (i, j) was decided.
        if (p > 0 && (p == pairs_.size() || pairs_[p].first != pairs_[p - 1].first)) {
            Vertex done = pairs_[p - 1].first;
            if (!row_ok(done)) return;
        }
        if (p == pairs_.size()) {
            if (row_ok(n_ - 1)) accept();
            return;
        }
        auto [i, j] = pairs_[p];
        extend(p + 1);
        if (static_cast<int>(edges_.size()) < max_edges_ && degree_[static_cast<std::size_t>(i)] < r_ &&
            degree_[static_cast<std::size_t>(j)] < r_) {
            edges_.emplace_back(i, j);
            ++degree_[static_cast<std::size_t>(i)];
            ++degree_[static_cast<std::size_t>(j)];
            extend(p + 1);
            --degree_[static_cast<std::size_t>(i)];
            --degree_[static_cast<std::size_t>(j)];
            edges_.pop_back();
        }
    }

    // Degrees are final once a row closes; require them non-increasing so
    // each isomorphism class is reached through few labellings.
    bool row_ok(Vertex i) const {
        const int d = degree_[static_cast<std::size_t>(i)];
        if (d < r_ - 1) return false;
        if (i == 0) return d == r_;
        return d <= degree_[static_cast<std::size_t>(i - 1)];
    }

    void accept() {
        Graph g = build_graph(n_, edges_);
        if (!is_connected(g)) return;
        found_->emplace(n_, canonical_mask());
    }

    Mask canonical_mask() {
        std::vector<Vertex> order;
        std::vector<char> taken(static_cast<std::size_t>(n_), 0);
        Mask best = std::numeric_limits<Mask>::max();
        permute(order, taken, best);
        return best;
    }

    // Relabellings that keep the non-increasing degree layout.
    void permute(std::vector<Vertex>& order, std::vector<char>& taken, Mask& best) {
        const auto pos = order.size();
        if (pos == static_cast<std::size_t>(n_)) {
            std::vector<Vertex> relabel(static_cast<std::size_t>(n_));
            for (std::size_t k = 0; k < order.size(); ++k) relabel[static_cast<std::size_t>(order[k])] = static_cast<Vertex>(k);
            Mask m = 0;
            for (auto [a, b] : edges_) {
                Vertex x = relabel[static_cast<std::size_t>(a)];
                Vertex y = relabel[static_cast<std::size_t>(b)];
                if (x > y) std::swap(x, y);
                m |= Mask{1} << pair_index(x, y);
            }
            best = std::min(best, m);
            return;
        }
        const int want = degree_[pos];
        for (Vertex v = 0; v < n_; ++v) {
            if (taken[static_cast<std::size_t>(v)] || degree_[static_cast<std::size_t>(v)] != want) continue;
            taken[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
            permute(order, taken, best);
            order.pop_back();
            taken[static_cast<std::size_t>(v)] = 0;
        }
    }

    int n_;
    int r_;
    int max_edges_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<int> degree_;
    std::set<std::pair<int, Mask>>* found_ = nullptr;
};

}  // namespace

std::vector<Graph> small_near_regular_graphs(int max_edges) {
    std::set<std::pair<int, Mask>> found;
    // A vertex of degree r with all neighbours of degree >= r-1 needs at
    // least r + r(r-1) endpoint slots, i.e. r^2 / 2 edges.
    for (int r = 3; r * r <= 2 * max_edges; ++r) {
        for (int n = r + 1; n * (r - 1) <= 2 * max_edges; ++n) {
            if (n * (n - 1) / 2 > 64) throw PreconditionError({"small graph enumeration limited to 11 vertices"});
            NearRegularEnumerator(n, r, max_edges).run(found);
        }
    }
    std::vector<Graph> graphs;
    for (auto [n, mask] : found) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex j = 1; j < n; ++j) {
            for (Vertex i = 0; i < j; ++i) {
                if (mask & (Mask{1} << (j * (j - 1) / 2 + i))) edges.emplace_back(i, j);
            }
        }
        graphs.push_back(build_graph(n, edges));
    }
    return graphs;
}

}  // namespace seqcolor
