#include <algorithm>
#include <chrono>
#include <numeric>

#include "doctest.h"

#include "locdim/constructions.hpp"
#include "locdim/decomposition.hpp"
#include "locdim/generators.hpp"
#include "test_util.hpp"

using namespace locdim;

namespace {

Graph triangle_chain(int count) {
    ChainSpec spec;
    spec.parts.assign(static_cast<size_t>(count), Graph::complete(3));
    spec.links.assign(static_cast<size_t>(count) - 1, {1, 2});
    return chain(spec).first;
}

// Reference for the attachment sets: actually delete the cut vertex's edges
// inside the block, take its component, and test bipartiteness there.
bool hanging_side_non_bipartite(const Graph& g, const VertexSet& block, int cut) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        bool dropped = (u == cut && block.contains(v)) || (v == cut && block.contains(u));
        if (!dropped) edges.push_back({u, v});
    }
    Graph trimmed = Graph::from_edge_list(g.order(), edges);
    auto dist = bfs_distances(trimmed, cut);
    VertexSet component(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (dist[static_cast<size_t>(v)] != kUnreachable) component.add(v);
    return !is_bipartite(induced_subgraph(trimmed, component).graph);
}

Graph random_cut_instance(std::uint64_t seed) {
    switch (seed % 4) {
        case 0: return gen_cactus(4 + static_cast<int>(seed % 9), seed);
        case 1: return gen_block_graph(2 + static_cast<int>(seed % 3), 4, seed);
        case 2: return gen_chain_of(2 + static_cast<int>(seed % 2), 4, seed);
        default: {
            auto g = gen_random_connected(3 + static_cast<int>(seed % 4), 0.5, seed);
            auto h = gen_random_connected(3 + static_cast<int>(seed / 7 % 4), 0.5, seed + 13);
            auto attached = point_attach(
                {g, h}, {{0, static_cast<int>(seed % static_cast<std::uint64_t>(g.order())), 1,
                          static_cast<int>(seed % static_cast<std::uint64_t>(h.order()))}});
            return attached.first;
        }
    }
}

}  // namespace

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("articulation_points") {
    CHECK(articulation_points(fixtures::bowtie()).to_vector() == std::vector<int>{2});
    CHECK(articulation_points(Graph::complete(5)).empty());
    CHECK(articulation_points(Graph::path(4)).to_vector() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(articulation_points(Graph::from_edge_list(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("blocks") {
    auto bow = blocks(fixtures::bowtie());
    REQUIRE(bow.blocks.size() == 2);
    CHECK(bow.cut_vertices.to_vector() == std::vector<int>{2});
    for (const auto& b : bow.blocks) CHECK(b.size() == 3);

    auto p4 = blocks(Graph::path(4));
    CHECK(p4.blocks.size() == 3);
    for (const auto& b : p4.blocks) CHECK(b.size() == 2);

    auto pendant = point_attach({Graph::cycle(5), Graph::complete(2)}, {{0, 0, 1, 0}});
    auto d = blocks(pendant.first);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.cut_vertices.size() == 1);
    std::vector<int> sizes{d.blocks[0].size(), d.blocks[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 5});
}

TEST_CASE("block structure invariants on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_cut_instance(seed);
        auto d = blocks(g);
        int edge_sum = 0;
        for (size_t j = 0; j < d.blocks.size(); ++j)
            edge_sum += block_view(g, d, static_cast<int>(j)).subgraph.edge_count();
        CHECK(edge_sum == g.edge_count());
        for (size_t a = 0; a < d.blocks.size(); ++a)
            for (size_t b = a + 1; b < d.blocks.size(); ++b)
                CHECK((d.blocks[a] & d.blocks[b]).size() <= 1);
        CHECK(articulation_points(g) == d.cut_vertices);
    }
}

TEST_CASE("classify fixtures") {
    auto bow = classify(fixtures::bowtie(), blocks(fixtures::bowtie()));
    REQUIRE(bow.classified);
    CHECK(bow.non_bipartite == std::vector<bool>{true, true});
    CHECK(bow.attachment_sets[0].to_vector() == std::vector<int>{2});
    CHECK(bow.attachment_sets[1].to_vector() == std::vector<int>{2});

    // triangle with a pendant path: the hanging side at the cut is bipartite
    auto tri_path = point_attach({Graph::complete(3), Graph::path(3)}, {{0, 0, 1, 0}}).first;
    auto d = classify(tri_path, blocks(tri_path));
    for (size_t j = 0; j < d.blocks.size(); ++j) {
        if (d.non_bipartite[j]) CHECK(d.attachment_sets[j].empty());
    }

    auto mid = classify(triangle_chain(3), blocks(triangle_chain(3)));
    int with_two = 0;
    for (size_t j = 0; j < mid.blocks.size(); ++j)
        if (mid.attachment_sets[j].size() == 2) ++with_two;
    CHECK(with_two == 1);  // only the middle triangle sees both sides
}

TEST_CASE("classification agrees with explicit hanging-side materialization") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_cut_instance(seed + 300);
        if (g.order() > 15) continue;
        auto d = classify(g, blocks(g));
        for (size_t j = 0; j < d.blocks.size(); ++j)
            for (int cut : d.block_cuts[j])
                CHECK(d.attachment_sets[j].contains(cut) ==
                      hanging_side_non_bipartite(g, d.blocks[j], cut));
    }
}

TEST_CASE("dim_via_decomposition fixtures") {
    auto bow = dim_via_decomposition(fixtures::bowtie());
    CHECK(bow.dimension == 2);
    CHECK(bow.method == Method::Decomposition);
    CHECK(is_local_metric_generator(fixtures::bowtie(), bow.witness));

    // non-bipartite unicyclic graphs sit at exactly 2
    int seen = 0;
    for (std::uint64_t seed = 0; seen < 12 && seed < 100; ++seed) {
        auto g = gen_unicyclic(9, seed);
        if (is_bipartite(g)) continue;
        ++seen;
        CHECK(dim_via_decomposition(g).dimension == 2);
    }
    CHECK(seen == 12);

    // even cycle with a pendant triangle: the triangle alone decides
    auto c6_tri = point_attach({Graph::cycle(6), Graph::complete(3)}, {{0, 0, 1, 0}}).first;
    CHECK(dim_via_decomposition(c6_tri).dimension == 2);

    CHECK(dim_via_decomposition(triangle_chain(3)).dimension == 2);

    // no cut vertices: degrade to the whole-graph solver
    auto k7 = dim_via_decomposition(Graph::complete(7));
    CHECK(k7.dimension == 6);
    CHECK(k7.method == Method::CompleteFastPath);
    auto w5 = dim_via_decomposition(fixtures::wheel5());
    CHECK(w5.dimension == 2);
    CHECK(w5.method == Method::BruteForce);

    CHECK(dim_via_decomposition(Graph::path(2)).dimension == 1);
    CHECK_THROWS_AS(dim_via_decomposition(Graph::complete(1)), TrivialGraphError);
}

TEST_CASE("per-part completions of the triangle chain") {
    auto g = triangle_chain(3);
    auto d = classify(g, blocks(g));
    std::vector<int> completions;
    for (size_t j = 0; j < d.blocks.size(); ++j) {
        auto view = block_view(g, d, static_cast<int>(j));
        VertexSet anchors(view.subgraph.order());
        for (int i = 0; i < view.subgraph.order(); ++i)
            if (d.attachment_sets[j].contains(view.back_map[static_cast<size_t>(i)]))
                anchors.add(i);
        completions.push_back(min_completion(view.subgraph, anchors).size);
    }
    std::sort(completions.begin(), completions.end());
    CHECK(completions == std::vector<int>{0, 1, 1});
}

TEST_CASE("oracle equivalence on random cut-vertex instances") {
    int used = 0;
    for (std::uint64_t seed = 0; used < 60 && seed < 400; ++seed) {
        auto g = random_cut_instance(seed);
        if (g.order() < 3 || g.order() > 11 || articulation_points(g).empty()) continue;
        ++used;
        auto engine = dim_via_decomposition(g);
        auto brute = brute_force_dimension(g);
        CHECK(engine.dimension == brute.dimension);
        CHECK(is_local_metric_generator(g, engine.witness));
        if (!is_bipartite(g)) CHECK(engine.dimension <= upper_bound_via_alpha(g));
    }
    CHECK(used == 60);
}

TEST_CASE("bipartite inputs collapse to 1") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_connected(9, 0.35, seed + 600);
        auto d = classify(g, blocks(g));
        bool any_non_bipartite =
            std::any_of(d.non_bipartite.begin(), d.non_bipartite.end(), [](bool b) { return b; });
        CHECK(any_non_bipartite == !is_bipartite(g));
        if (!any_non_bipartite) {
            auto r = dim_via_decomposition(g);
            CHECK(r.dimension == 1);
            CHECK(r.method == Method::BipartiteFastPath);
        }
    }
}

TEST_CASE("upper_bound_via_alpha fixtures") {
    CHECK(upper_bound_via_alpha(fixtures::bowtie()) == 2);
    CHECK(upper_bound_via_alpha(fixtures::wheel5()) ==
          brute_force_dimension(fixtures::wheel5()).dimension);
    CHECK(upper_bound_via_alpha(triangle_chain(3)) == 2);
    CHECK_THROWS_AS(upper_bound_via_alpha(Graph::cycle(6)), BadSpecError);
}

TEST_CASE("equality_certificate") {
    auto block_graph = gen_block_graph(3, 4, 5);
    auto cert = equality_certificate(block_graph);
    CHECK(cert.all_hold);
    CHECK(cert.equality_holds);

    auto bow = equality_certificate(fixtures::bowtie());
    CHECK(bow.all_hold);
    CHECK(bow.bound_value == 2);
    CHECK(bow.engine_value == 2);

    // a wheel block fails the hypothesis; the report marks it and claims nothing
    auto with_wheel = point_attach({fixtures::wheel5(), Graph::complete(3)}, {{0, 0, 1, 0}});
    auto bad = equality_certificate(with_wheel.first);
    CHECK_FALSE(bad.all_hold);
    CHECK(std::count(bad.block_hypothesis.begin(), bad.block_hypothesis.end(), false) == 1);
}

TEST_CASE("threaded solves match single-threaded, witness included") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_block_graph(5, 5, seed + 50);
        auto one = dim_via_decomposition(g, {}, 1);
        auto four = dim_via_decomposition(g, {}, 4);
        CHECK(one.dimension == four.dimension);
        CHECK(one.witness == four.witness);
    }
}

TEST_CASE("worker failures surface as exceptions under multithreading") {
    // two blocks above a tiny search cap
    auto g = point_attach({Graph::cycle(7), Graph::cycle(9)}, {{0, 0, 1, 0}}).first;
    SearchLimits tight;
    tight.max_exact = 5;
    CHECK_THROWS_AS(dim_via_decomposition(g, tight, 4), SearchLimitError);
    CHECK_THROWS_AS(dim_via_decomposition(g, tight, 1), SearchLimitError);
}

TEST_CASE("chains of cliques scale to sizes brute force cannot touch") {
    auto timed_chain = [](int count) {
        ChainSpec spec;
        spec.parts.assign(static_cast<size_t>(count), Graph::complete(5));
        spec.links.assign(static_cast<size_t>(count) - 1, {1, 2});
        auto g = chain(spec).first;
        auto start = std::chrono::steady_clock::now();
        auto r = dim_via_decomposition(g);
        double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        CHECK(r.dimension == 2 * 3 + (count - 2) * 2);
        return us;
    };
    double small = timed_chain(32);
    double large = timed_chain(256);
    // 8x the blocks should cost far less than the 64x a quadratic walk would;
    // floors damp timer noise on the small run
    CHECK(large < 20.0 * std::max(small, 2000.0));
    CHECK(large < 2e6);  // well under desk scale either way
}

TEST_SUITE_END();
