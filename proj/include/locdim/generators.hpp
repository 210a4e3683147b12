#pragma once

#include <cstdint>

#include "locdim/graph.hpp"

namespace locdim {

/// Seeded random instance families. Every generated graph is connected and
/// simple, and identical configs always produce identical edge sets.
struct GeneratorConfig {
    enum class Family { RandomConnected, Unicyclic, BlockGraph, ChainOf, Cactus };

    Family family = Family::RandomConnected;
    int n = 8;              // RandomConnected, Unicyclic, Cactus
    double edge_prob = 0.3; // RandomConnected
    int blocks = 3;         // BlockGraph
    int max_order = 4;      // BlockGraph, ChainOf
    int parts = 3;          // ChainOf
    std::uint64_t seed = 0;
};

Graph generate(const GeneratorConfig& config);

Graph gen_random_connected(int n, double edge_prob, std::uint64_t seed);
Graph gen_unicyclic(int n, std::uint64_t seed);
Graph gen_block_graph(int blocks, int max_order, std::uint64_t seed);
Graph gen_chain_of(int parts, int max_order, std::uint64_t seed);
Graph gen_cactus(int n, std::uint64_t seed);

}  // namespace locdim
