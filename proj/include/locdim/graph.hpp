#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "locdim/bitset.hpp"
#include "locdim/errors.hpp"

namespace locdim {

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// adjacency lists and optional display labels.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list, deduplicating symmetric/duplicate pairs.
    /// Rejects self-loops and out-of-range endpoints.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels = {});

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const;

    const std::vector<std::string>& labels() const { return labels_; }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order()) throw VertexOutOfRangeError(v, order());
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int m_ = 0;
};

/// Sentinel for unreachable vertices in distance vectors; the maximum
/// representable count so distance vectors stay order-comparable.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop counts from source to every vertex (kUnreachable where no path).
std::vector<int> bfs_distances(const Graph& g, int source);

/// One distance row per vertex (n BFS passes).
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> coloring;   // 0/1 per vertex when bipartite (per component)
    std::vector<int> odd_cycle;  // closed odd walk witness when not bipartite
};

/// Proper-2-coloring test, per connected component, with witness either way.
BipartiteCheck check_bipartite(const Graph& g);
bool is_bipartite(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new index -> original vertex
};

/// Subgraph induced by s, re-indexed to 0..|s|-1 in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Disjoint copies of g and h plus every cross edge.
Graph join(const Graph& g, const Graph& h);

/// Disjoint copies of g and h, no cross edges. h's vertices follow g's.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Exact maximum-clique size by branch and bound. Diagnostic use only;
/// rejects graphs above max_order.
int clique_number(const Graph& g, int max_order = 32);

}  // namespace locdim
