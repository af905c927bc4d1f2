#pragma once

// Longest-path machinery: an exact subset-DP oracle for small graphs, and the
// constructive blob heuristic — contract blobs, find a long path in the
// auxiliary graph by randomized DFS, then expand it back through the blobs.

#include <cstdint>

#include "gstar/decomposition.hpp"
#include "gstar/graph.hpp"
#include "gstar/perturb.hpp"

namespace gstar {

inline constexpr int kExactPathLimit = 20;

enum class PathMethod { exact, blob_heuristic, dfs_fallback };

std::string to_string(PathMethod m);

struct PathWitness {
    std::vector<int> vertices;  // consecutive entries adjacent, all distinct
    int length = 0;             // edge count = |vertices| - 1
    PathMethod method = PathMethod::exact;
};

// Maximum-length simple path by DP over (vertex subset, endpoint) states;
// n <= kExactPathLimit. Deterministic tie-breaking.
PathWitness longest_path_exact(const Graph& g);

// Blob pipeline: partition the base graph with size parameter k, contract to
// the auxiliary graph, search it with seeded randomized DFS restarts, then
// expand the auxiliary path through the blobs (base edges route between the
// per-blob entry and exit vertices; the first and last blobs are traversed
// from their farthest in-blob vertex). The result is simple and at least as
// long as the auxiliary path. A degenerate auxiliary graph (single blob)
// falls back to the deepest double-BFS path in the merged graph.
PathWitness long_path_blob_heuristic(const PerturbedGraph& pg, int k, std::uint64_t seed);

// Checks the witness against g: consecutive adjacency and distinctness.
bool path_is_valid(const Graph& g, const PathWitness& w);

}  // namespace gstar
