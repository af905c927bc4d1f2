#pragma once

// Partition of a connected graph into connected pieces ("blobs") with sizes in
// [k, delta*k], and the auxiliary graph obtained by contracting each blob to a
// super-vertex.

#include <map>
#include <vector>

#include "gstar/graph.hpp"
#include "gstar/perturb.hpp"

namespace gstar {

struct BlobPartition {
    std::vector<std::vector<int>> blobs;  // sorted vertex lists, partitioning V
    std::vector<int> blob_of;             // vertex -> blob index
    int k = 1;
    int delta = 0;  // max degree of the graph at partition time

    int count() const { return static_cast<int>(blobs.size()); }
};

// Deepest-subtree-first cutting of a BFS spanning tree rooted at vertex 0:
// walking vertices by decreasing depth, a vertex whose live subtree reaches
// size k is cut off as a blob (its children's live subtrees are all below k,
// so the blob has at most 1 + delta*(k-1) <= delta*k vertices). A leftover
// residual of size < k at the root is merged into the earliest-cut blob that
// hangs off it by a tree edge, which keeps that blob within delta*k as well.
BlobPartition blob_partition(const Graph& g, int k);

struct AuxiliaryBlobGraph {
    Graph graph;  // one vertex per blob; edge {i,j} iff a merged edge joins them
    // For each auxiliary edge {i,j} (i < j): one witnessing merged edge,
    // oriented (vertex in blob i, vertex in blob j).
    std::map<Edge, Edge> witness;
};

AuxiliaryBlobGraph auxiliary_blob_graph(const PerturbedGraph& pg, const BlobPartition& part);

}  // namespace gstar
