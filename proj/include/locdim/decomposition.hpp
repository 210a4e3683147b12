#pragma once

#include <vector>

#include "locdim/graph.hpp"
#include "locdim/local_metric.hpp"

namespace locdim {

/// Block structure of a connected graph: maximal 2-connected subgraphs and
/// bridge edges, the cut vertices, and the bipartite adjacency between them
/// (the block-cut tree). classify() fills the per-block non-bipartite flags
/// and attachment sets.
struct Decomposition {
    std::vector<VertexSet> blocks;             // original-graph coordinates
    VertexSet cut_vertices;
    std::vector<std::vector<int>> block_cuts;  // per block: its cut vertices, sorted
    std::vector<std::vector<int>> vertex_blocks;  // per vertex: blocks containing it

    // filled by classify()
    bool classified = false;
    std::vector<bool> non_bipartite;        // per block
    std::vector<VertexSet> attachment_sets; // per block: cut vertices whose
                                            // hanging side is non-bipartite
};

/// One block extracted as a re-indexed graph.
struct BlockView {
    int block_index = 0;
    Graph subgraph;
    std::vector<int> back_map;  // block-local index -> original vertex
};

/// Vertices whose removal disconnects g, by one lowlink DFS.
VertexSet articulation_points(const Graph& g);

/// Edge partition into blocks plus the block-cut tree skeleton.
Decomposition blocks(const Graph& g);

/// Fills non-bipartite flags and attachment sets. The hanging side at a cut
/// vertex is non-bipartite exactly when some block on that side is, so a
/// rerooted OR over the block-cut tree answers every (block, cut) query
/// without materializing the hanging subgraphs.
Decomposition classify(const Graph& g, Decomposition d);

BlockView block_view(const Graph& g, const Decomposition& d, int block_index);

/// Exact dimension as the sum of per-block anchored completions over the
/// non-bipartite blocks; witness is the union of the per-block witnesses.
/// Degrades to the whole-graph solver when there are no cut vertices.
/// Per-block solves run concurrently when threads > 1; results are
/// schedule-independent.
DimResult dim_via_decomposition(const Graph& g, const SearchLimits& limits = {},
                                int threads = 1);

/// Sum over non-bipartite blocks of (block dimension - max basis overlap of
/// its attachment set); an upper bound on the dimension.
int upper_bound_via_alpha(const Graph& g, const SearchLimits& limits = {});

/// Per-block minimal-generator hypothesis check; when every block passes,
/// the upper bound is provably exact and is cross-checked against the engine.
struct EqualityReport {
    std::vector<bool> block_hypothesis;  // per block
    bool all_hold = false;
    int bound_value = 0;
    int engine_value = 0;
    bool equality_holds = false;  // meaningful only when all_hold
};

EqualityReport equality_certificate(const Graph& g, const SearchLimits& limits = {});

}  // namespace locdim
