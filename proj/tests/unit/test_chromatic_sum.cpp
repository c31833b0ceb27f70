#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "property.hpp"
#include "seqcolor/chromatic_sum.hpp"
#include "seqcolor/errors.hpp"

using namespace seqcolor;

TEST_CASE("coloring_sum") {
    CHECK(coloring_sum(fixtures::k4(), EdgeColoring{{1, 2, 3, 3, 2, 1}, 3}) == 12);
    CHECK(coloring_sum(build_graph(2, {{0, 1}}), EdgeColoring{{1}, 1}) == 1);
    auto k33 = fixtures::k33();
    auto c = konig_color_bipartite(k33);
    CHECK(coloring_sum(k33, c) == 18);  // three perfect matchings
    CHECK_THROWS_AS(coloring_sum(fixtures::k4(), EdgeColoring{{1, 2, 3}, 3}), CoverageError);
}

TEST_CASE("corollary2_bound") {
    CHECK(corollary2_bound(4, 4, 3) == 12);
    CHECK(corollary2_bound(6, 6, 3) == 18);
    CHECK(corollary2_bound(5, 2, 3) == 12);  // 150 / 12 rounded down
}

TEST_CASE("corollary2_bound is monotone in n and n_r") {
    for (std::int64_t r = 3; r <= 8; ++r) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            for (std::int64_t nr = 0; nr <= n; ++nr) {
                CHECK(corollary2_bound(n + 1, nr, r) >= corollary2_bound(n, nr, r));
                if (nr < n) CHECK(corollary2_bound(n, nr + 1, r) >= corollary2_bound(n, nr, r));
            }
        }
    }
}

TEST_CASE("per_vertex_sum_bound") {
    CHECK(per_vertex_sum_bound(5, 2, 3, 1) == 12);
    CHECK(per_vertex_sum_bound(4, 4, 3, 0) == 12);
    // Raising s never raises the bound: r(r-1) <= (r+2)(r-1).
    for (std::int64_t s = 0; s < 3; ++s) {
        CHECK(per_vertex_sum_bound(5, 2, 3, s + 1) <= per_vertex_sum_bound(5, 2, 3, s));
    }
}

TEST_CASE("vertex_sum_decomposition on K2,3") {
    // After sequentializing the explicit coloring: palettes {1,2,3} twice,
    // then y1 {1,2}, y2 {2,3}, y3 {1,3}.
    auto g = fixtures::k23();
    auto d = vertex_sum_decomposition(g, EdgeColoring{{1, 2, 3, 2, 3, 1}, 3});
    CHECK(d.r == 3);
    CHECK(d.vertex_sums == std::vector<std::int64_t>{6, 6, 3, 5, 4});
    CHECK(d.edge_sum == 12);
    CHECK(d.full_palette.vertices == std::vector<Vertex>{0, 1});
    CHECK(d.missing_top.vertices == std::vector<Vertex>{2});
    CHECK(d.other_deficient.vertices == std::vector<Vertex>{3, 4});
    CHECK(d.other_deficient.sum == 9);
    CHECK_THROWS_AS(vertex_sum_decomposition(g, EdgeColoring{{1, 1, 2, 3, 2, 1}, 3}), PreconditionError);
}

TEST_CASE("sum_report on named graphs") {
    auto k23 = sum_report(fixtures::k23(), true);
    CHECK(k23.actual_sum == 12);
    CHECK(k23.bound == 12);
    REQUIRE(k23.exact_sum);
    CHECK(*k23.exact_sum == 12);
    CHECK(k23.chain_holds);

    auto k4 = sum_report(fixtures::k4(), true);
    CHECK(k4.actual_sum == 12);
    CHECK(k4.bound == 12);
    CHECK(k4.exact_sum == 12);
    CHECK(k4.chain_holds);

    auto k44 = sum_report(generate_regular_class1(4), false);
    CHECK_FALSE(k44.exact_sum);
    CHECK(k44.actual_sum == 40);
    CHECK(k44.chain_holds);
}

TEST_CASE("double counting on fuzzed proper colorings") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        auto g = fixtures::random_graph(2 + iter % 20, 0.3, rng);
        auto c = misra_gries(g);
        std::vector<Color> names(static_cast<std::size_t>(c.color_count));
        std::iota(names.begin(), names.end(), 1);
        std::shuffle(names.begin(), names.end(), rng);
        for (auto& col : c.colors) col = names[static_cast<std::size_t>(col - 1)];
        auto d = vertex_sum_decomposition(g, c);
        CHECK(d.vertex_total == 2 * coloring_sum(g, c));
        CHECK(d.full_palette.sum + d.missing_top.sum + d.other_deficient.sum == d.vertex_total);
        CHECK(d.full_palette.vertices.size() + d.missing_top.vertices.size() +
                  d.other_deficient.vertices.size() ==
              static_cast<std::size_t>(g.vertex_count()));
    }
}

TEST_CASE("sum chain on sequentialized near-regular graphs") {
    std::mt19937_64 rng(8675309);
    for (int iter = 0; iter < 200; ++iter) {
        auto inst = property::random_instance(rng);
        const auto& g = inst.graph;
        auto cert = sequentialize(g, property::random_r_coloring(g, rng));
        auto rep = sum_report(g, cert, false);
        const std::int64_t r = cert.r;
        const auto& d = rep.decomposition;

        CHECK(d.full_palette.sum == static_cast<std::int64_t>(d.full_palette.vertices.size()) * r * (r + 1) / 2);
        CHECK(d.missing_top.sum == static_cast<std::int64_t>(d.missing_top.vertices.size()) * r * (r - 1) / 2);
        CHECK(d.other_deficient.sum <=
              static_cast<std::int64_t>(d.other_deficient.vertices.size()) * (r + 2) * (r - 1) / 2);
        CHECK(static_cast<std::int64_t>(d.missing_top.vertices.size()) * r >= cert.n - cert.n_r);
        CHECK(rep.actual_sum <= rep.per_vertex_bound);
        CHECK(rep.per_vertex_bound <= rep.bound);
        CHECK(rep.chain_holds);
    }
}
