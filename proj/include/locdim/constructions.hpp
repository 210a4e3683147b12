#pragma once

#include <utility>
#include <vector>

#include "locdim/graph.hpp"
#include "locdim/local_metric.hpp"

namespace locdim {

/// Provenance of a glued graph: which (part, vertex) pairs each constructed
/// vertex came from, and which constructed vertices are identifications.
struct AttachmentMeta {
    std::vector<std::vector<std::pair<int, int>>> origins;  // per constructed vertex
    std::vector<int> attachment_vertices;                   // constructed ids, sorted
    std::vector<std::vector<int>> part_maps;                // part -> vertex -> constructed id

    int index_of(int part, int vertex) const {
        return part_maps.at(static_cast<size_t>(part)).at(static_cast<size_t>(vertex));
    }
};

struct Identification {
    int part_a;
    int vertex_a;
    int part_b;
    int vertex_b;
    bool operator==(const Identification&) const = default;
};

/// Glues parts at identified vertex pairs. Each identification must merge two
/// different already-separate components (tree-like pattern); parts are laid
/// out left to right and a merged vertex keeps the earlier index.
std::pair<Graph, AttachmentMeta> point_attach(const std::vector<Graph>& parts,
                                              const std::vector<Identification>& ids);

struct RootedSpec {
    Graph base;
    std::vector<Graph> factors;
    std::vector<int> roots;  // one per factor

    static RootedSpec uniform(Graph base, const Graph& factor, int root);
};

/// Identifies the root of the i-th factor with base vertex i.
std::pair<Graph, AttachmentMeta> rooted_product(const RootedSpec& spec);

/// Joins every vertex of the i-th factor to base vertex i (built by gluing
/// an apex+factor join onto each base vertex).
std::pair<Graph, AttachmentMeta> corona(const Graph& base, const std::vector<Graph>& factors);

/// Identifies one designated vertex of every part into a single hub.
std::pair<Graph, AttachmentMeta> bouquet(const std::vector<Graph>& parts,
                                         const std::vector<int>& roots);

/// Parts glued end to end: links[i] = (vertex in part i, vertex in part i+1)
/// identified together. Middle parts must use distinct entry/exit vertices.
struct ChainSpec {
    std::vector<Graph> parts;
    std::vector<std::pair<int, int>> links;  // size parts.size() - 1
};

std::pair<Graph, AttachmentMeta> chain(const ChainSpec& spec);

/// Dimension of the rooted product with base_order identical copies of
/// factor: base_order * dim(factor), minus base_order when the root lies in
/// some basis. Bipartite factors reduce to the base dimension (base required).
int closed_form_rooted_uniform(int base_order, const Graph& factor, int root,
                               const Graph* base = nullptr, const SearchLimits& limits = {});

/// Per-factor sum for a sequence of non-bipartite rooted factors.
int closed_form_rooted_sequence(const std::vector<Graph>& factors, const std::vector<int>& roots,
                                const SearchLimits& limits = {});

/// (lower, upper) bounds for a rooted product with non-bipartite factor;
/// the upper bound tightens by one factor order step when factor is not
/// complete.
std::pair<int, int> rooted_dimension_bounds(int base_order, const Graph& factor);

/// Corona dimension via the apex join: base_order * dim(apex + factor),
/// minus base_order when the apex lies in some basis. Factors need >= 1 edge.
int closed_form_corona_uniform(int base_order, const Graph& factor,
                               const SearchLimits& limits = {});

int closed_form_corona_sequence(const std::vector<Graph>& factors,
                                const SearchLimits& limits = {});

/// Metadata of one clique block of a block graph.
struct BlockGraphBlock {
    int order = 0;
    int cut_vertex_count = 0;
    bool all_vertices_cut = false;
};

/// Sum over clique blocks of (order - 1 - overlap), where the overlap is the
/// block's cut-vertex count, capped at order - 1 when every vertex is a cut.
/// Requires every block order >= 3.
int closed_form_block_graph(const std::vector<BlockGraphBlock>& blocks);

/// Chain dimension by the per-part replaceability case analysis; the one
/// ambiguous case is resolved by an exact anchored completion.
int closed_form_chain(const ChainSpec& spec, const SearchLimits& limits = {});

/// Bouquet dimension: per non-bipartite part, subtract one when its hub
/// vertex lies in some basis AND another part is non-bipartite.
int closed_form_bouquet(const std::vector<Graph>& parts, const std::vector<int>& roots,
                        const SearchLimits& limits = {});

/// Variant that subtracts on basis membership alone, kept for cross-checking
/// the two readings of the bouquet rule against the engine.
int closed_form_bouquet_membership_rule(const std::vector<Graph>& parts,
                                        const std::vector<int>& roots,
                                        const SearchLimits& limits = {});

/// True iff v belongs to at least one local metric basis of g.
bool vertex_in_some_basis(const Graph& g, int v, const SearchLimits& limits = {});

}  // namespace locdim
