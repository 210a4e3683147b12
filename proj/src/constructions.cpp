#include "locdim/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace locdim {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    // Keeps the smaller index as representative.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace

std::pair<Graph, AttachmentMeta> point_attach(const std::vector<Graph>& parts,
                                              const std::vector<Identification>& ids) {
    const int k = static_cast<int>(parts.size());
    if (k == 0) throw BadSpecError("point_attach needs at least one part");
    std::vector<int> offset(static_cast<size_t>(k) + 1, 0);
    for (int p = 0; p < k; ++p) {
        if (parts[static_cast<size_t>(p)].order() < 1)
            throw BadSpecError("parts must be non-empty graphs");
        offset[static_cast<size_t>(p) + 1] = offset[static_cast<size_t>(p)] +
                                             parts[static_cast<size_t>(p)].order();
    }
    const int total = offset[static_cast<size_t>(k)];
    auto global = [&](int part, int vertex) {
        if (part < 0 || part >= k) throw VertexOutOfRangeError(part, k);
        if (vertex < 0 || vertex >= parts[static_cast<size_t>(part)].order())
            throw VertexOutOfRangeError(vertex, parts[static_cast<size_t>(part)].order());
        return offset[static_cast<size_t>(part)] + vertex;
    };

    UnionFind vertex_classes(total);
    UnionFind part_components(k);
    for (const auto& id : ids) {
        int ga = global(id.part_a, id.vertex_a);
        int gb = global(id.part_b, id.vertex_b);
        if (!part_components.unite(id.part_a, id.part_b))
            throw BadIdentificationError("identification merges two vertices of the same "
                                         "already-built component");
        vertex_classes.unite(ga, gb);
    }
    for (int p = 1; p < k; ++p)
        if (part_components.find(p) != part_components.find(0)) throw DisconnectedResultError();

    // Compact representatives in increasing global order so an identified
    // vertex keeps the earliest index.
    std::vector<int> new_index(static_cast<size_t>(total), -1);
    int next = 0;
    for (int gid = 0; gid < total; ++gid)
        if (vertex_classes.find(gid) == gid) new_index[static_cast<size_t>(gid)] = next++;
    for (int gid = 0; gid < total; ++gid)
        new_index[static_cast<size_t>(gid)] =
            new_index[static_cast<size_t>(vertex_classes.find(gid))];

    AttachmentMeta meta;
    meta.origins.assign(static_cast<size_t>(next), {});
    meta.part_maps.assign(static_cast<size_t>(k), {});
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < k; ++p) {
        const auto& part = parts[static_cast<size_t>(p)];
        meta.part_maps[static_cast<size_t>(p)].resize(static_cast<size_t>(part.order()));
        for (int v = 0; v < part.order(); ++v) {
            int id = new_index[static_cast<size_t>(global(p, v))];
            meta.part_maps[static_cast<size_t>(p)][static_cast<size_t>(v)] = id;
            meta.origins[static_cast<size_t>(id)].emplace_back(p, v);
        }
        for (auto [u, v] : part.edges())
            edges.emplace_back(new_index[static_cast<size_t>(global(p, u))],
                               new_index[static_cast<size_t>(global(p, v))]);
    }
    for (int id = 0; id < next; ++id)
        if (meta.origins[static_cast<size_t>(id)].size() >= 2)
            meta.attachment_vertices.push_back(id);

    Graph g = Graph::from_edge_list(next, edges);
    if (!is_connected(g)) throw DisconnectedResultError();
    return {std::move(g), std::move(meta)};
}

RootedSpec RootedSpec::uniform(Graph base, const Graph& factor, int root) {
    RootedSpec spec;
    const int n = base.order();
    spec.base = std::move(base);
    spec.factors.assign(static_cast<size_t>(n), factor);
    spec.roots.assign(static_cast<size_t>(n), root);
    return spec;
}

std::pair<Graph, AttachmentMeta> rooted_product(const RootedSpec& spec) {
    const int n = spec.base.order();
    if (static_cast<int>(spec.factors.size()) != n ||
        static_cast<int>(spec.roots.size()) != n)
        throw ArityMismatchError("rooted product needs one rooted factor per base vertex");
    std::vector<Graph> parts{spec.base};
    parts.insert(parts.end(), spec.factors.begin(), spec.factors.end());
    std::vector<Identification> ids;
    for (int i = 0; i < n; ++i)
        ids.push_back({0, i, i + 1, spec.roots[static_cast<size_t>(i)]});
    return point_attach(parts, ids);
}

std::pair<Graph, AttachmentMeta> corona(const Graph& base, const std::vector<Graph>& factors) {
    const int n = base.order();
    if (static_cast<int>(factors.size()) != n)
        throw ArityMismatchError("corona needs one factor per base vertex");
    std::vector<Graph> parts{base};
    for (const auto& h : factors) parts.push_back(join(Graph::complete(1), h));
    std::vector<Identification> ids;
    for (int i = 0; i < n; ++i) ids.push_back({0, i, i + 1, 0});  // apex is vertex 0 of the join
    return point_attach(parts, ids);
}

std::pair<Graph, AttachmentMeta> bouquet(const std::vector<Graph>& parts,
                                         const std::vector<int>& roots) {
    if (parts.size() < 2 || roots.size() != parts.size())
        throw ArityMismatchError("bouquet needs >= 2 parts with one root each");
    std::vector<Identification> ids;
    for (size_t i = 1; i < parts.size(); ++i)
        ids.push_back({0, roots[0], static_cast<int>(i), roots[i]});
    return point_attach(parts, ids);
}

std::pair<Graph, AttachmentMeta> chain(const ChainSpec& spec) {
    const int k = static_cast<int>(spec.parts.size());
    if (k < 2) throw BadSpecError("chain needs at least two parts");
    if (static_cast<int>(spec.links.size()) != k - 1)
        throw BadSpecError("chain needs exactly one link per junction");
    for (int i = 0; i + 1 < k - 1; ++i) {
        // middle part i+1 enters at links[i].second and exits at links[i+1].first
        if (spec.links[static_cast<size_t>(i)].second ==
            spec.links[static_cast<size_t>(i) + 1].first)
            throw BadSpecError("middle chain part must use distinct entry and exit vertices");
    }
    std::vector<Identification> ids;
    for (int i = 0; i < k - 1; ++i)
        ids.push_back({i, spec.links[static_cast<size_t>(i)].first, i + 1,
                       spec.links[static_cast<size_t>(i)].second});
    return point_attach(spec.parts, ids);
}

bool vertex_in_some_basis(const Graph& g, int v, const SearchLimits& limits) {
    if (v < 0 || v >= g.order()) throw VertexOutOfRangeError(v, g.order());
    for (const auto& basis : enumerate_local_metric_bases(g, limits).bases)
        if (basis.contains(v)) return true;
    return false;
}

int closed_form_rooted_uniform(int base_order, const Graph& factor, int root, const Graph* base,
                               const SearchLimits& limits) {
    if (base_order < 1) throw BadOrderError("base order must be >= 1");
    if (!is_connected(factor)) throw DisconnectedError();
    if (is_bipartite(factor)) {
        if (base == nullptr) throw MissingBaseError();
        return local_metric_dimension(*base, limits).dimension;
    }
    const int d = local_metric_dimension(factor, limits).dimension;
    if (base_order == 1) return d;  // the product is the factor itself
    return vertex_in_some_basis(factor, root, limits) ? base_order * (d - 1) : base_order * d;
}

int closed_form_rooted_sequence(const std::vector<Graph>& factors, const std::vector<int>& roots,
                                const SearchLimits& limits) {
    if (factors.size() != roots.size() || factors.size() < 2)
        throw ArityMismatchError("rooted sequence needs >= 2 factors with one root each");
    int sum = 0;
    for (size_t j = 0; j < factors.size(); ++j) {
        if (!is_connected(factors[j])) throw DisconnectedError();
        if (is_bipartite(factors[j]))
            throw BadSpecError("rooted sequence form needs non-bipartite factors");
        sum += local_metric_dimension(factors[j], limits).dimension -
               (vertex_in_some_basis(factors[j], roots[j], limits) ? 1 : 0);
    }
    return sum;
}

std::pair<int, int> rooted_dimension_bounds(int base_order, const Graph& factor) {
    if (base_order < 2) throw BadOrderError("bounds need base order >= 2");
    if (!is_connected(factor) || is_bipartite(factor))
        throw BadSpecError("bounds need a connected non-bipartite factor");
    const int fo = factor.order();
    int upper = base_order * (fo - 2);
    if (factor.edge_count() != fo * (fo - 1) / 2) upper = base_order * (fo - 3);
    return {base_order, upper};
}

int closed_form_corona_uniform(int base_order, const Graph& factor, const SearchLimits& limits) {
    if (base_order < 1) throw BadOrderError("base order must be >= 1");
    if (factor.edge_count() == 0)
        throw BadSpecError("corona closed form needs a factor with at least one edge");
    Graph apexed = join(Graph::complete(1), factor);
    const int d = local_metric_dimension(apexed, limits).dimension;
    if (base_order == 1) return d;
    return vertex_in_some_basis(apexed, 0, limits) ? base_order * (d - 1) : base_order * d;
}

int closed_form_corona_sequence(const std::vector<Graph>& factors, const SearchLimits& limits) {
    if (factors.size() < 2)
        throw ArityMismatchError("corona sequence needs >= 2 factors");
    int sum = 0;
    for (const auto& h : factors) {
        if (h.edge_count() == 0)
            throw BadSpecError("corona closed form needs factors with at least one edge");
        Graph apexed = join(Graph::complete(1), h);
        sum += local_metric_dimension(apexed, limits).dimension -
               (vertex_in_some_basis(apexed, 0, limits) ? 1 : 0);
    }
    return sum;
}

int closed_form_block_graph(const std::vector<BlockGraphBlock>& blocks) {
    int sum = 0;
    for (const auto& b : blocks) {
        if (b.order < 3) throw BadBlockOrderError(b.order);
        if (b.cut_vertex_count < 0 || b.cut_vertex_count > b.order)
            throw BadSpecError("cut-vertex count out of range");
        int overlap = b.all_vertices_cut ? b.order - 1 : b.cut_vertex_count;
        sum += b.order - 1 - overlap;
    }
    return sum;
}

namespace {

bool some_basis_contains_both(const BasisFamily& family, int a, int b) {
    for (const auto& basis : family.bases)
        if (basis.contains(a) && basis.contains(b)) return true;
    return false;
}

bool some_basis_contains(const BasisFamily& family, int v) {
    for (const auto& basis : family.bases)
        if (basis.contains(v)) return true;
    return false;
}

}  // namespace

int closed_form_chain(const ChainSpec& spec, const SearchLimits& limits) {
    const int k = static_cast<int>(spec.parts.size());
    if (k < 2) throw BadSpecError("chain needs at least two parts");
    if (static_cast<int>(spec.links.size()) != k - 1)
        throw BadSpecError("chain needs exactly one link per junction");
    for (int i = 0; i + 1 < k - 1; ++i)
        if (spec.links[static_cast<size_t>(i)].second ==
            spec.links[static_cast<size_t>(i) + 1].first)
            throw BadSpecError("middle chain part must use distinct entry and exit vertices");
    std::vector<bool> non_bip(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        if (!is_connected(spec.parts[static_cast<size_t>(j)])) throw DisconnectedError();
        non_bip[static_cast<size_t>(j)] = !is_bipartite(spec.parts[static_cast<size_t>(j)]);
    }
    if (std::none_of(non_bip.begin(), non_bip.end(), [](bool b) { return b; }))
        return 1;  // every part bipartite, so the chain is
    std::vector<bool> left(static_cast<size_t>(k), false), right(static_cast<size_t>(k), false);
    for (int j = 1; j < k; ++j)
        left[static_cast<size_t>(j)] = left[static_cast<size_t>(j) - 1] ||
                                       non_bip[static_cast<size_t>(j) - 1];
    for (int j = k - 2; j >= 0; --j)
        right[static_cast<size_t>(j)] = right[static_cast<size_t>(j) + 1] ||
                                        non_bip[static_cast<size_t>(j) + 1];

    int sum = 0;
    for (int j = 0; j < k; ++j) {
        if (!non_bip[static_cast<size_t>(j)]) continue;
        const Graph& part = spec.parts[static_cast<size_t>(j)];
        // entry (toward lower indices) and exit (toward higher indices)
        int entry = j > 0 ? spec.links[static_cast<size_t>(j) - 1].second : -1;
        int exit = j < k - 1 ? spec.links[static_cast<size_t>(j)].first : -1;
        auto family = enumerate_local_metric_bases(part, limits);
        const int d = static_cast<int>(family.bases.front().size());
        bool entry_replaceable =
            entry >= 0 && left[static_cast<size_t>(j)] && some_basis_contains(family, entry);
        bool exit_replaceable =
            exit >= 0 && right[static_cast<size_t>(j)] && some_basis_contains(family, exit);
        if (j == 0) {
            sum += exit_replaceable ? d - 1 : d;
        } else if (j == k - 1) {
            sum += entry_replaceable ? d - 1 : d;
        } else if (entry_replaceable && exit_replaceable &&
                   some_basis_contains_both(family, entry, exit)) {
            sum += d - 2;
        } else if (entry_replaceable || exit_replaceable) {
            sum += d - 1;
        } else {
            // neither endpoint replaceable: the discount may still apply, so
            // solve the anchored completion exactly
            VertexSet anchors(part.order());
            if (entry >= 0 && left[static_cast<size_t>(j)]) anchors.add(entry);
            if (exit >= 0 && right[static_cast<size_t>(j)]) anchors.add(exit);
            sum += min_completion(part, anchors, limits).size;
        }
    }
    return sum;
}

namespace {

int bouquet_sum(const std::vector<Graph>& parts, const std::vector<int>& roots,
                const SearchLimits& limits, bool require_other_non_bipartite) {
    if (parts.size() < 2 || roots.size() != parts.size())
        throw ArityMismatchError("bouquet needs >= 2 parts with one root each");
    int non_bip_count = 0;
    std::vector<bool> non_bip(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
        if (!is_connected(parts[j])) throw DisconnectedError();
        non_bip[j] = !is_bipartite(parts[j]);
        non_bip_count += non_bip[j] ? 1 : 0;
    }
    if (non_bip_count == 0)
        throw BadSpecError("bouquet closed form needs a non-bipartite part");
    int sum = 0;
    for (size_t j = 0; j < parts.size(); ++j) {
        if (!non_bip[j]) continue;
        int d = local_metric_dimension(parts[j], limits).dimension;
        bool rest_non_bipartite = non_bip_count >= 2;
        bool discount = vertex_in_some_basis(parts[j], roots[j], limits) &&
                        (!require_other_non_bipartite || rest_non_bipartite);
        sum += d - (discount ? 1 : 0);
    }
    return sum;
}

}  // namespace

int closed_form_bouquet(const std::vector<Graph>& parts, const std::vector<int>& roots,
                        const SearchLimits& limits) {
    return bouquet_sum(parts, roots, limits, true);
}

int closed_form_bouquet_membership_rule(const std::vector<Graph>& parts,
                                        const std::vector<int>& roots,
                                        const SearchLimits& limits) {
    return bouquet_sum(parts, roots, limits, false);
}

}  // namespace locdim
