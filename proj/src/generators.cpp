#include "locdim/generators.hpp"

#include <algorithm>
#include <random>

namespace locdim {

namespace {

// Thin wrapper over mt19937_64 with portable bounded draws (std distributions
// are implementation-defined, which would break cross-platform determinism).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int k) { return static_cast<int>(engine() % static_cast<std::uint64_t>(k)); }

    bool chance(double p) {
        return static_cast<double>(engine() >> 11) * (1.0 / 9007199254740992.0) < p;
    }
};

// Random recursive tree: each new vertex picks an existing parent.
std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return edges;
}

}  // namespace

Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw BadConfigError("random-connected needs n >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw BadConfigError("edge probability outside [0,1]");
    Rng rng(seed);
    auto edges = random_tree_edges(n, rng);
    Graph tree = Graph::from_edge_list(n, edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v) && rng.chance(edge_prob)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph gen_unicyclic(int n, std::uint64_t seed) {
    if (n < 3) throw BadConfigError("unicyclic needs n >= 3");
    Rng rng(seed);
    auto edges = random_tree_edges(n, rng);
    Graph tree = Graph::from_edge_list(n, edges);
    while (true) {
        int u = rng.below(n), v = rng.below(n);
        if (u != v && !tree.has_edge(u, v)) {
            edges.emplace_back(u, v);
            break;
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_block_graph(int blocks, int max_order, std::uint64_t seed) {
    if (blocks < 1 || max_order < 2) throw BadConfigError("block-graph needs blocks >= 1, max order >= 2");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    int first = 2 + rng.below(max_order - 1);
    int n = first;
    for (int u = 0; u < first; ++u)
        for (int v = u + 1; v < first; ++v) edges.emplace_back(u, v);
    for (int b = 1; b < blocks; ++b) {
        int order = 2 + rng.below(max_order - 1);
        int hub = rng.below(n);
        std::vector<int> members{hub};
        for (int i = 1; i < order; ++i) members.push_back(n++);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_chain_of(int parts, int max_order, std::uint64_t seed) {
    if (parts < 2 || max_order < 2) throw BadConfigError("chain-of needs parts >= 2, max order >= 2");
    Rng rng(seed);
    std::vector<Graph> pieces;
    for (int p = 0; p < parts; ++p) {
        int order = 2 + rng.below(max_order - 1);
        pieces.push_back(gen_random_connected(order, 0.5, rng.engine()));
    }
    // glue pieces sequentially, keeping each middle piece's entry and exit distinct
    std::vector<std::pair<int, int>> edges = pieces[0].edges();
    int n = pieces[0].order();
    int exit = rng.below(n);
    for (int p = 1; p < parts; ++p) {
        const Graph& piece = pieces[static_cast<size_t>(p)];
        int entry_local = rng.below(piece.order());
        std::vector<int> map(static_cast<size_t>(piece.order()));
        for (int v = 0; v < piece.order(); ++v)
            map[static_cast<size_t>(v)] = v == entry_local ? exit : n++;
        for (auto [u, v] : piece.edges())
            edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
        if (p < parts - 1) {
            int exit_local = rng.below(piece.order() - 1);
            if (exit_local >= entry_local) ++exit_local;  // distinct from the entry
            exit = map[static_cast<size_t>(exit_local)];
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_cactus(int n, std::uint64_t seed) {
    if (n < 1) throw BadConfigError("cactus needs n >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;
    while (built < n) {
        int at = rng.below(built);
        int remaining = n - built;
        if (remaining >= 2 && rng.chance(0.6)) {
            int cycle_len = 3 + rng.below(std::min(4, remaining - 1));
            int prev = at;
            for (int i = 0; i < cycle_len - 1; ++i) {
                edges.emplace_back(prev, built);
                prev = built++;
            }
            edges.emplace_back(prev, at);
        } else {
            edges.emplace_back(at, built++);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph generate(const GeneratorConfig& c) {
    switch (c.family) {
        case GeneratorConfig::Family::RandomConnected:
            return gen_random_connected(c.n, c.edge_prob, c.seed);
        case GeneratorConfig::Family::Unicyclic:
            return gen_unicyclic(c.n, c.seed);
        case GeneratorConfig::Family::BlockGraph:
            return gen_block_graph(c.blocks, c.max_order, c.seed);
        case GeneratorConfig::Family::ChainOf:
            return gen_chain_of(c.parts, c.max_order, c.seed);
        case GeneratorConfig::Family::Cactus:
            return gen_cactus(c.n, c.seed);
    }
    throw BadConfigError("unknown family");
}

}  // namespace locdim
