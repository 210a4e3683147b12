#include "locdim/local_metric.hpp"

#include <algorithm>
#include <optional>

namespace locdim {

const char* method_name(Method m) {
    switch (m) {
        case Method::BipartiteFastPath: return "bipartite-fast-path";
        case Method::CompleteFastPath: return "complete-fast-path";
        case Method::CliqueFastPath: return "clique-fast-path";
        case Method::BruteForce: return "brute-force";
        case Method::Decomposition: return "decomposition";
        case Method::ClosedForm: return "closed-form";
    }
    return "unknown";
}

std::vector<int> representation(const Graph& g, int u, const std::vector<int>& landmarks) {
    auto dist = bfs_distances(g, u);
    std::vector<int> rep;
    rep.reserve(landmarks.size());
    for (int w : landmarks) {
        if (w < 0 || w >= g.order()) throw VertexOutOfRangeError(w, g.order());
        rep.push_back(dist[static_cast<size_t>(w)]);
    }
    return rep;
}

bool is_local_metric_generator(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw EmptySetError();
    if (!is_connected(g)) throw DisconnectedError();
    if (w.universe() != g.order()) throw VertexOutOfRangeError(w.universe(), g.order());
    std::vector<std::vector<int>> rows;
    w.for_each([&](int x) { rows.push_back(bfs_distances(g, x)); });
    for (auto [u, v] : g.edges()) {
        bool distinguished = false;
        for (const auto& row : rows) {
            if (row[static_cast<size_t>(u)] != row[static_cast<size_t>(v)]) {
                distinguished = true;
                break;
            }
        }
        if (!distinguished) return false;
    }
    return true;
}

namespace {

// Edge-coverage view of one graph: covers[x] holds the edges whose endpoints
// differ in distance to x. A vertex set is a generator iff its coverage
// union hits every edge, turning the search into exact minimum set cover.
struct CoverContext {
    int n = 0;
    int m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<BitSet> covers;
    BitSet all_edges;
};

CoverContext make_cover_context(const Graph& g) {
    CoverContext ctx;
    ctx.n = g.order();
    ctx.edges = g.edges();
    ctx.m = static_cast<int>(ctx.edges.size());
    ctx.all_edges = BitSet::full(ctx.m);
    ctx.covers.reserve(static_cast<size_t>(ctx.n));
    for (int x = 0; x < ctx.n; ++x) {
        auto dist = bfs_distances(g, x);
        BitSet c(ctx.m);
        for (int e = 0; e < ctx.m; ++e) {
            auto [u, v] = ctx.edges[static_cast<size_t>(e)];
            if (dist[static_cast<size_t>(u)] != dist[static_cast<size_t>(v)]) c.add(e);
        }
        ctx.covers.push_back(std::move(c));
    }
    return ctx;
}

struct CoverSearch {
    const CoverContext& ctx;
    const std::vector<int>& cand;
    std::vector<BitSet> suffix_or;    // union of covers over cand[i..]
    std::vector<int> suffix_max;      // max cover size over cand[i..]
    std::vector<int> chosen;

    explicit CoverSearch(const CoverContext& c, const std::vector<int>& candidates)
        : ctx(c), cand(candidates) {
        const size_t k = cand.size();
        suffix_or.assign(k + 1, BitSet(ctx.m));
        suffix_max.assign(k + 1, 0);
        for (size_t i = k; i-- > 0;) {
            suffix_or[i] = suffix_or[i + 1] | ctx.covers[static_cast<size_t>(cand[i])];
            suffix_max[i] =
                std::max(suffix_max[i + 1], ctx.covers[static_cast<size_t>(cand[i])].size());
        }
    }

    bool dfs(size_t start, int remaining, const BitSet& current) {
        if (remaining == 0) return current == ctx.all_edges;
        if (!((current | suffix_or[start]) == ctx.all_edges)) return false;
        int uncovered = ctx.m - current.size();
        if (remaining * suffix_max[start] < uncovered) return false;
        for (size_t i = start; i + static_cast<size_t>(remaining) <= cand.size(); ++i) {
            const BitSet& cov = ctx.covers[static_cast<size_t>(cand[i])];
            if (cov.minus(current).empty()) continue;  // contributes nothing here
            chosen.push_back(cand[i]);
            if (dfs(i + 1, remaining - 1, current | cov)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

// Lexicographically-first minimum subset of candidates whose coverage,
// together with base, hits every edge. Iterative deepening keeps the
// by-size/lexicographic search order exact under pruning.
std::optional<std::vector<int>> min_cover(const CoverContext& ctx, const BitSet& base,
                                          const std::vector<int>& candidates) {
    if (base == ctx.all_edges) return std::vector<int>{};
    std::vector<int> useful;
    for (int v : candidates)
        if (!ctx.covers[static_cast<size_t>(v)].minus(base).empty()) useful.push_back(v);
    CoverSearch search(ctx, useful);
    if (!((base | search.suffix_or[0]) == ctx.all_edges)) return std::nullopt;
    for (int k = 1; k <= static_cast<int>(useful.size()); ++k) {
        search.chosen.clear();
        if (search.dfs(0, k, base)) return search.chosen;
    }
    return std::nullopt;
}

VertexSet to_vertex_set(int n, const std::vector<int>& members) {
    VertexSet s(n);
    for (int v : members) s.add(v);
    return s;
}

// First generator of exactly the given size in lexicographic subset order.
std::optional<VertexSet> first_generator_of_size(const CoverContext& ctx, int size) {
    std::vector<int> comb(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
        BitSet covered(ctx.m);
        for (int v : comb) covered |= ctx.covers[static_cast<size_t>(v)];
        if (covered == ctx.all_edges) return to_vertex_set(ctx.n, comb);
        // next lexicographic combination
        int i = size - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == ctx.n - size + i) --i;
        if (i < 0) return std::nullopt;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
}

DimResult dimension_by_search(const Graph& g, const SearchLimits& limits) {
    if (g.order() > limits.max_exact) throw SearchLimitError(g.order(), limits.max_exact);
    auto ctx = make_cover_context(g);
    std::vector<int> cand(static_cast<size_t>(ctx.n));
    for (int v = 0; v < ctx.n; ++v) cand[static_cast<size_t>(v)] = v;
    auto sol = min_cover(ctx, BitSet(ctx.m), cand);
    if (!sol) throw InfeasibleError();
    return {static_cast<int>(sol->size()), to_vertex_set(ctx.n, *sol), Method::BruteForce};
}

void require_solvable(const Graph& g) {
    if (g.order() < 2) throw TrivialGraphError();
    if (!is_connected(g)) throw DisconnectedError();
}

}  // namespace

DimResult local_metric_dimension(const Graph& g, const SearchLimits& limits) {
    require_solvable(g);
    const int n = g.order();
    if (is_bipartite(g)) return {1, BitSet::of(n, {0}), Method::BipartiteFastPath};
    if (g.edge_count() == n * (n - 1) / 2) {
        VertexSet w(n);
        for (int v = 0; v + 1 < n; ++v) w.add(v);
        return {n - 1, w, Method::CompleteFastPath};
    }
    if (n >= 3 && n <= limits.max_clique && clique_number(g, limits.max_clique) == n - 1) {
        auto ctx = make_cover_context(g);
        auto w = first_generator_of_size(ctx, n - 2);
        if (w) return {n - 2, *w, Method::CliqueFastPath};
        // unreachable for a correct clique count; fall through to the search
    }
    return dimension_by_search(g, limits);
}

DimResult brute_force_dimension(const Graph& g, const SearchLimits& limits) {
    require_solvable(g);
    return dimension_by_search(g, limits);
}

BasisFamily enumerate_local_metric_bases(const Graph& g, const SearchLimits& limits) {
    require_solvable(g);
    if (g.order() > limits.max_bases) throw TooLargeError(g.order(), limits.max_bases);
    const int d = local_metric_dimension(g, limits).dimension;
    auto ctx = make_cover_context(g);
    BasisFamily family;
    std::vector<int> comb(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
        BitSet covered(ctx.m);
        for (int v : comb) covered |= ctx.covers[static_cast<size_t>(v)];
        if (covered == ctx.all_edges) family.bases.push_back(to_vertex_set(ctx.n, comb));
        int i = d - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == ctx.n - d + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return family;
}

Completion min_completion(const Graph& g, const VertexSet& anchors, const SearchLimits& limits) {
    const int n = g.order();
    if (anchors.universe() != n) throw VertexOutOfRangeError(anchors.universe(), n);
    if (!is_connected(g)) throw DisconnectedError();
    if (n > limits.max_exact) throw SearchLimitError(n, limits.max_exact);
    auto ctx = make_cover_context(g);
    BitSet base(ctx.m);
    anchors.for_each([&](int x) { base |= ctx.covers[static_cast<size_t>(x)]; });
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (!anchors.contains(v)) cand.push_back(v);
    auto sol = min_cover(ctx, base, cand);
    if (!sol) throw InfeasibleError();
    return {static_cast<int>(sol->size()), to_vertex_set(n, *sol)};
}

int max_basis_overlap(const Graph& g, const VertexSet& anchors, const SearchLimits& limits) {
    if (anchors.universe() != g.order())
        throw VertexOutOfRangeError(anchors.universe(), g.order());
    if (!is_connected(g)) throw DisconnectedError();
    if (anchors.empty()) return 0;
    auto family = enumerate_local_metric_bases(g, limits);
    int best = 0;
    for (const auto& basis : family.bases) best = std::max(best, (anchors & basis).size());
    return best;
}

bool is_minimal_generator_always_minimum(const Graph& g, const SearchLimits& limits) {
    require_solvable(g);
    const int n = g.order();
    if (n > limits.max_minimal_check) throw TooLargeError(n, limits.max_minimal_check);
    const int d = brute_force_dimension(g, limits).dimension;
    auto ctx = make_cover_context(g);
    // coverage of every subset, built incrementally from the lowest set bit
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<BitSet> cover(total, BitSet(ctx.m));
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(mask);
        cover[mask] = cover[mask & (mask - 1)] | ctx.covers[static_cast<size_t>(low)];
    }
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (!(cover[mask] == ctx.all_edges)) continue;
        if (std::popcount(mask) == d) continue;
        bool minimal = true;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            std::uint32_t without = mask ^ (rest & ~(rest - 1));
            if (cover[without] == ctx.all_edges) {
                minimal = false;
                break;
            }
        }
        if (minimal) return false;
    }
    return true;
}

}  // namespace locdim
