#pragma once

#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

enum class Method {
    BipartiteFastPath,
    CompleteFastPath,
    CliqueFastPath,
    BruteForce,
    Decomposition,
    ClosedForm,
};

const char* method_name(Method m);

/// Computed local metric dimension with a witness generator of that size.
struct DimResult {
    int dimension = 0;
    VertexSet witness;
    Method method = Method::BruteForce;
};

/// All local metric bases (minimum generators) of one graph.
struct BasisFamily {
    std::vector<VertexSet> bases;
};

/// Caps on the exponential searches. Exceeding one raises SearchLimitError
/// or TooLargeError instead of running away.
struct SearchLimits {
    int max_exact = 24;          // brute-force subset search
    int max_bases = 16;          // full basis enumeration
    int max_clique = 32;         // clique-number fast path
    int max_minimal_check = 12;  // exhaustive minimality scan
};

/// Distance vector from u to the ordered landmarks.
std::vector<int> representation(const Graph& g, int u, const std::vector<int>& landmarks);

/// True iff every pair of adjacent vertices differs in distance to some
/// member of w.
bool is_local_metric_generator(const Graph& g, const VertexSet& w);

/// Minimum generator size with witness. Fast paths: bipartite -> 1,
/// complete -> n-1, clique number n-1 -> n-2; otherwise subsets are searched
/// by increasing size, lexicographically within a size, so the witness is
/// deterministic.
DimResult local_metric_dimension(const Graph& g, const SearchLimits& limits = {});

/// The same search with every fast path disabled; the oracle baseline.
DimResult brute_force_dimension(const Graph& g, const SearchLimits& limits = {});

BasisFamily enumerate_local_metric_bases(const Graph& g, const SearchLimits& limits = {});

/// Minimal extension of a required anchor set into a generator.
struct Completion {
    int size = 0;
    VertexSet witness;  // disjoint from the anchor set
};

/// Smallest S with S union anchors a local metric generator. Returns the
/// lexicographically-first minimizer among vertices outside anchors.
Completion min_completion(const Graph& g, const VertexSet& anchors,
                          const SearchLimits& limits = {});

/// Largest overlap of anchors with any local metric basis.
int max_basis_overlap(const Graph& g, const VertexSet& anchors, const SearchLimits& limits = {});

/// True iff every inclusion-minimal local metric generator is minimum,
/// by exhaustive scan over all vertex subsets.
bool is_minimal_generator_always_minimum(const Graph& g, const SearchLimits& limits = {});

}  // namespace locdim
