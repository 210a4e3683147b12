#include "locdim/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace locdim {

namespace {

struct DfsFrame {
    int v;
    int parent;
    size_t next = 0;
};

}  // namespace

VertexSet articulation_points(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    const int n = g.order();
    VertexSet cuts(n);
    if (n <= 2) return cuts;
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    int timer = 0;
    int root_children = 0;
    std::vector<DfsFrame> stack{{0, -1}};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            int w = nb[f.next++];
            if (w == f.parent) continue;
            if (disc[static_cast<size_t>(w)] == -1) {
                if (f.v == 0) ++root_children;
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                stack.push_back({w, f.v});
            } else {
                low[static_cast<size_t>(f.v)] =
                    std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            int child = f.v;
            stack.pop_back();
            if (stack.empty()) break;
            int u = stack.back().v;
            low[static_cast<size_t>(u)] =
                std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(child)]);
            if (u != 0 && low[static_cast<size_t>(child)] >= disc[static_cast<size_t>(u)])
                cuts.add(u);
        }
    }
    if (root_children >= 2) cuts.add(0);
    return cuts;
}

Decomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    const int n = g.order();
    Decomposition d;
    d.cut_vertices = VertexSet(n);
    d.vertex_blocks.assign(static_cast<size_t>(n), {});
    if (n == 1) {
        d.blocks.push_back(BitSet::of(1, {0}));
        d.block_cuts.push_back({});
        d.vertex_blocks[0].push_back(0);
        return d;
    }
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<DfsFrame> stack{{0, -1}};
    int timer = 0;
    disc[0] = low[0] = timer++;
    auto flush_block = [&](int u, int child) {
        VertexSet block(n);
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block.add(a);
            block.add(b);
            if (a == u && b == child) break;
        }
        d.blocks.push_back(std::move(block));
    };
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            int w = nb[f.next++];
            if (w == f.parent) continue;
            if (disc[static_cast<size_t>(w)] == -1) {
                edge_stack.emplace_back(f.v, w);
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                stack.push_back({w, f.v});
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                edge_stack.emplace_back(f.v, w);
                low[static_cast<size_t>(f.v)] =
                    std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            int child = f.v;
            stack.pop_back();
            if (stack.empty()) break;
            int u = stack.back().v;
            low[static_cast<size_t>(u)] =
                std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(child)]);
            if (low[static_cast<size_t>(child)] >= disc[static_cast<size_t>(u)])
                flush_block(u, child);
        }
    }
    // cut vertices are exactly the vertices shared by two or more blocks
    for (size_t j = 0; j < d.blocks.size(); ++j)
        d.blocks[j].for_each(
            [&](int v) { d.vertex_blocks[static_cast<size_t>(v)].push_back(static_cast<int>(j)); });
    d.block_cuts.assign(d.blocks.size(), {});
    for (int v = 0; v < n; ++v) {
        if (d.vertex_blocks[static_cast<size_t>(v)].size() >= 2) {
            d.cut_vertices.add(v);
            for (int j : d.vertex_blocks[static_cast<size_t>(v)])
                d.block_cuts[static_cast<size_t>(j)].push_back(v);
        }
    }
    return d;
}

BlockView block_view(const Graph& g, const Decomposition& d, int block_index) {
    auto sub = induced_subgraph(g, d.blocks.at(static_cast<size_t>(block_index)));
    return {block_index, std::move(sub.graph), std::move(sub.to_original)};
}

Decomposition classify(const Graph& g, Decomposition d) {
    const int n = g.order();
    const int b = static_cast<int>(d.blocks.size());
    if (b == 0 || d.cut_vertices.universe() != n)
        throw InconsistentDecompositionError("decomposition does not match graph");
    int edge_total = 0;
    d.non_bipartite.assign(static_cast<size_t>(b), false);
    d.attachment_sets.assign(static_cast<size_t>(b), VertexSet(n));
    for (int j = 0; j < b; ++j) {
        auto view = block_view(g, d, j);
        edge_total += view.subgraph.edge_count();
        d.non_bipartite[static_cast<size_t>(j)] = !is_bipartite(view.subgraph);
    }
    if (edge_total != g.edge_count())
        throw InconsistentDecompositionError("blocks do not partition the edge set");

    // Block-cut tree: nodes 0..b-1 are blocks, then one node per cut vertex.
    auto cuts = d.cut_vertices.to_vector();
    std::vector<int> cut_node(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < cuts.size(); ++i)
        cut_node[static_cast<size_t>(cuts[i])] = b + static_cast<int>(i);
    const int total = b + static_cast<int>(cuts.size());
    std::vector<std::vector<int>> tree(static_cast<size_t>(total));
    for (int j = 0; j < b; ++j) {
        for (int v : d.block_cuts[static_cast<size_t>(j)]) {
            int c = cut_node[static_cast<size_t>(v)];
            tree[static_cast<size_t>(j)].push_back(c);
            tree[static_cast<size_t>(c)].push_back(j);
        }
    }
    auto self_flag = [&](int node) {
        return node < b && d.non_bipartite[static_cast<size_t>(node)];
    };

    // Root at node 0 and compute, for each node, whether its subtree (down)
    // or the rest of the tree (out) contains a non-bipartite block.
    std::vector<int> parent(static_cast<size_t>(total), -1), order;
    order.reserve(static_cast<size_t>(total));
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int w : tree[static_cast<size_t>(u)])
            if (w != parent[static_cast<size_t>(u)]) {
                parent[static_cast<size_t>(w)] = u;
                order.push_back(w);
            }
    }
    std::vector<char> down(static_cast<size_t>(total), 0), out(static_cast<size_t>(total), 0);
    for (size_t i = order.size(); i-- > 0;) {
        int u = order[i];
        down[static_cast<size_t>(u)] = self_flag(u);
        for (int w : tree[static_cast<size_t>(u)])
            if (w != parent[static_cast<size_t>(u)] && down[static_cast<size_t>(w)])
                down[static_cast<size_t>(u)] = 1;
    }
    for (int u : order) {
        std::vector<int> children;
        for (int w : tree[static_cast<size_t>(u)])
            if (w != parent[static_cast<size_t>(u)]) children.push_back(w);
        char above = static_cast<char>(self_flag(u) || out[static_cast<size_t>(u)]);
        std::vector<char> suffix(children.size() + 1, 0);
        for (size_t i = children.size(); i-- > 0;)
            suffix[i] = static_cast<char>(suffix[i + 1] ||
                                          down[static_cast<size_t>(children[i])]);
        char prefix = 0;
        for (size_t i = 0; i < children.size(); ++i) {
            out[static_cast<size_t>(children[i])] =
                static_cast<char>(above || prefix || suffix[i + 1]);
            prefix = static_cast<char>(prefix || down[static_cast<size_t>(children[i])]);
        }
    }
    for (int j = 0; j < b; ++j) {
        for (int v : d.block_cuts[static_cast<size_t>(j)]) {
            int c = cut_node[static_cast<size_t>(v)];
            bool hanging_non_bipartite =
                parent[static_cast<size_t>(c)] == j ? down[static_cast<size_t>(c)] != 0
                                                    : out[static_cast<size_t>(j)] != 0;
            if (hanging_non_bipartite) d.attachment_sets[static_cast<size_t>(j)].add(v);
        }
    }
    d.classified = true;
    return d;
}

namespace {

VertexSet map_to_block(const VertexSet& original, const std::vector<int>& back_map) {
    VertexSet local(static_cast<int>(back_map.size()));
    for (size_t i = 0; i < back_map.size(); ++i)
        if (original.contains(back_map[i])) local.add(static_cast<int>(i));
    return local;
}

}  // namespace

DimResult dim_via_decomposition(const Graph& g, const SearchLimits& limits, int threads) {
    if (g.order() < 2) throw TrivialGraphError();
    if (!is_connected(g)) throw DisconnectedError();
    if (is_bipartite(g)) return {1, BitSet::of(g.order(), {0}), Method::BipartiteFastPath};
    auto d = classify(g, blocks(g));
    if (d.cut_vertices.empty()) return local_metric_dimension(g, limits);

    std::vector<int> solve_order;
    for (int j = 0; j < static_cast<int>(d.blocks.size()); ++j)
        if (d.non_bipartite[static_cast<size_t>(j)]) solve_order.push_back(j);

    std::vector<Completion> results(solve_order.size());
    std::vector<std::vector<int>> maps(solve_order.size());
    auto solve_one = [&](size_t i) {
        auto view = block_view(g, d, solve_order[i]);
        auto anchors =
            map_to_block(d.attachment_sets[static_cast<size_t>(solve_order[i])], view.back_map);
        results[i] = min_completion(view.subgraph, anchors, limits);
        maps[i] = std::move(view.back_map);
    };
    if (threads <= 1 || solve_order.size() <= 1) {
        for (size_t i = 0; i < solve_order.size(); ++i) solve_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::mutex failure_lock;
        std::exception_ptr failure;
        auto worker = [&] {
            try {
                for (size_t i = next.fetch_add(1); i < solve_order.size(); i = next.fetch_add(1))
                    solve_one(i);
            } catch (...) {
                std::lock_guard guard(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(threads, static_cast<int>(solve_order.size()));
        pool.reserve(static_cast<size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    DimResult out{0, VertexSet(g.order()), Method::Decomposition};
    for (size_t i = 0; i < solve_order.size(); ++i) {
        out.dimension += results[i].size;
        results[i].witness.for_each([&](int local) {
            out.witness.add(maps[i][static_cast<size_t>(local)]);
        });
    }
    return out;
}

int upper_bound_via_alpha(const Graph& g, const SearchLimits& limits) {
    if (!is_connected(g)) throw DisconnectedError();
    if (is_bipartite(g)) throw BadSpecError("upper bound is defined for non-bipartite graphs");
    auto d = classify(g, blocks(g));
    int bound = 0;
    for (int j = 0; j < static_cast<int>(d.blocks.size()); ++j) {
        if (!d.non_bipartite[static_cast<size_t>(j)]) continue;
        auto view = block_view(g, d, j);
        auto anchors = map_to_block(d.attachment_sets[static_cast<size_t>(j)], view.back_map);
        bound += local_metric_dimension(view.subgraph, limits).dimension -
                 max_basis_overlap(view.subgraph, anchors, limits);
    }
    return bound;
}

EqualityReport equality_certificate(const Graph& g, const SearchLimits& limits) {
    if (!is_connected(g)) throw DisconnectedError();
    if (is_bipartite(g))
        throw BadSpecError("equality certificate is defined for non-bipartite graphs");
    auto d = classify(g, blocks(g));
    EqualityReport report;
    report.all_hold = true;
    for (int j = 0; j < static_cast<int>(d.blocks.size()); ++j) {
        auto view = block_view(g, d, j);
        bool holds = view.subgraph.order() < 2 ||
                     is_minimal_generator_always_minimum(view.subgraph, limits);
        report.block_hypothesis.push_back(holds);
        report.all_hold = report.all_hold && holds;
    }
    report.engine_value = dim_via_decomposition(g, limits).dimension;
    report.bound_value = upper_bound_via_alpha(g, limits);
    report.equality_holds = report.bound_value == report.engine_value;
    return report;
}

}  // namespace locdim
