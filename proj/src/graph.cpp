#include "locdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace locdim {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels) {
    if (n < 0) throw BadOrderError("negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u == v) throw SelfLoopError(u);
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::complete(int n) {
    if (n < 1) throw BadOrderError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edge_list(n, e);
}

Graph Graph::path(int n) {
    if (n < 1) throw BadOrderError("path graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return from_edge_list(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw BadOrderError("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return from_edge_list(n, e);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) e.emplace_back(u, v);
    return e;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n) throw VertexOutOfRangeError(source, n);
    std::vector<int> dist(static_cast<size_t>(n), kUnreachable);
    std::deque<int> queue{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kUnreachable) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

BipartiteCheck check_bipartite(const Graph& g) {
    const int n = g.order();
    BipartiteCheck res;
    res.coloring.assign(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (res.coloring[static_cast<size_t>(start)] != -1) continue;
        res.coloring[static_cast<size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (res.coloring[static_cast<size_t>(w)] == -1) {
                    res.coloring[static_cast<size_t>(w)] = res.coloring[static_cast<size_t>(u)] ^ 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else if (res.coloring[static_cast<size_t>(w)] ==
                           res.coloring[static_cast<size_t>(u)]) {
                    // Conflict edge u-w closes an odd cycle through their
                    // common BFS ancestor.
                    std::vector<int> pu{u}, pw{w};
                    auto depth = [&](int v) {
                        int d = 0;
                        for (int x = v; parent[static_cast<size_t>(x)] != -1;
                             x = parent[static_cast<size_t>(x)])
                            ++d;
                        return d;
                    };
                    int du = depth(u), dw = depth(w);
                    int a = u, b = w;
                    while (du > dw) { a = parent[static_cast<size_t>(a)]; pu.push_back(a); --du; }
                    while (dw > du) { b = parent[static_cast<size_t>(b)]; pw.push_back(b); --dw; }
                    while (a != b) {
                        a = parent[static_cast<size_t>(a)];
                        b = parent[static_cast<size_t>(b)];
                        pu.push_back(a);
                        pw.push_back(b);
                    }
                    // pu ends at the meeting vertex; append pw reversed minus it.
                    res.odd_cycle = pu;
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

bool is_bipartite(const Graph& g) { return check_bipartite(g).bipartite; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw EmptySetError();
    if (s.universe() != g.order()) throw VertexOutOfRangeError(s.universe(), g.order());
    InducedSubgraph out;
    out.to_original = s.to_vector();
    std::vector<int> to_new(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < out.to_original.size(); ++i)
        to_new[static_cast<size_t>(out.to_original[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int u : out.to_original)
        for (int v : g.neighbors(u))
            if (u < v && to_new[static_cast<size_t>(v)] != -1)
                e.emplace_back(to_new[static_cast<size_t>(u)], to_new[static_cast<size_t>(v)]);
    out.graph = Graph::from_edge_list(static_cast<int>(out.to_original.size()), e);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + n, v + n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < k; ++v) e.emplace_back(u, v + n);
    return Graph::from_edge_list(n + k, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + n, v + n);
    return Graph::from_edge_list(n + h.order(), e);
}

namespace {

struct CliqueSearch {
    std::vector<std::uint64_t> adj;
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            expand(cand & adj[static_cast<size_t>(v)], size + 1);
        }
        best = std::max(best, size);
    }
};

}  // namespace

int clique_number(const Graph& g, int max_order) {
    const int n = g.order();
    if (n < 1) throw BadOrderError("clique number needs n >= 1");
    if (n > max_order || n > 64) throw TooLargeError(n, std::min(max_order, 64));
    CliqueSearch search;
    search.adj.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        search.adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        search.adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.expand(all, 0);
    return search.best;
}

}  // namespace locdim
