#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdim/constructions.hpp"
#include "locdim/graph.hpp"

namespace locdim::dsl {

enum class Kind {
    Atom,         // K(n) | P(n) | C(n)
    InlineGraph,  // graph{n=5; 0-1 1-2}
    Join,
    Union,
    RootedUniform,  // rooted(base, factor@root)
    Rooted,         // rooted(base, [f@r, ...])
    CoronaUniform,  // corona(base, factor)
    Corona,         // corona(base, [f, ...])
    Bouquet,        // bouquet([parts], roots=[...])
    Chain,          // chain([parts], links=[(a, b), ...])
    Attach,         // attach([parts], ids=[((p, v), (p, v)), ...])
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    char family = 0;  // Atom
    int order = 0;    // Atom
    int n = 0;                                   // InlineGraph
    std::vector<std::pair<int, int>> edges;      // InlineGraph
    std::vector<NodePtr> children;               // operands; constructions put the base first
    std::vector<int> roots;                      // RootedUniform (one) / Rooted / Bouquet
    std::vector<std::pair<int, int>> links;      // Chain
    std::vector<Identification> ids;             // Attach
};

bool equal(const NodePtr& a, const NodePtr& b);

/// Parses one construction expression. Reports line/column on failure.
NodePtr parse(std::string_view text);

/// Canonical text form; parse(format(ast)) is structurally identical to ast.
std::string format(const NodePtr& ast);

struct EvalResult {
    Graph graph;
    AttachmentMeta meta;
};

/// Builds the described graph. Vertex numbering is deterministic: parts laid
/// out left to right, identifications keep the earlier index.
EvalResult eval(const NodePtr& ast);

}  // namespace locdim::dsl
