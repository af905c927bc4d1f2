#include "gstar/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace gstar {

BlobPartition blob_partition(const Graph& g, int k) {
    if (k < 1) throw domain_error("blob size bound k must be positive");
    if (k > g.n) throw domain_error("blob size bound k exceeds the vertex count");
    if (!is_connected(g)) throw domain_error("blob partition needs a connected graph");

    const int n = g.n;
    // BFS spanning tree from vertex 0; sorted adjacency makes it deterministic.
    std::vector<int> parent(n, -1), depth(n, -1), bfs(n);
    {
        depth[0] = 0;
        bfs[0] = 0;
        std::size_t size = 1;
        for (std::size_t head = 0; head < size; ++head) {
            const int u = bfs[head];
            for (int v : g.adj[u]) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    bfs[size++] = v;
                }
            }
        }
    }
    std::vector<std::vector<int>> children(n);
    for (int v = 1; v < n; ++v) children[parent[v]].push_back(v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (depth[a] != depth[b]) return depth[a] > depth[b];
        return a < b;
    });

    BlobPartition part;
    part.k = k;
    part.delta = g.max_degree();
    part.blob_of.assign(n, -1);

    std::vector<std::int64_t> acc(n, 1);  // live subtree size, children already folded in
    std::vector<char> cut(n, 0);
    std::vector<int> stack;
    for (int v : order) {
        if (acc[v] >= k) {
            // Cut the live subtree of v as one blob.
            std::vector<int> blob;
            stack.assign(1, v);
            cut[v] = 1;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                blob.push_back(x);
                part.blob_of[x] = part.count();
                for (int c : children[x])
                    if (!cut[c]) {
                        cut[c] = 1;
                        stack.push_back(c);
                    }
            }
            std::sort(blob.begin(), blob.end());
            part.blobs.push_back(std::move(blob));
        } else if (parent[v] >= 0) {
            acc[parent[v]] += acc[v];
        }
    }

    // Residual: uncut vertices form a subtree at the root with size < k.
    std::vector<int> residual;
    for (int v = 0; v < n; ++v)
        if (!cut[v]) residual.push_back(v);
    if (!residual.empty()) {
        // Merge into the earliest-cut blob whose root hangs off the residual.
        int target = -1;
        for (int v = 1; v < n; ++v)
            if (cut[v] && !cut[parent[v]]) {
                const int b = part.blob_of[v];
                if (target < 0 || b < target) target = b;
            }
        // k <= n guarantees at least one blob was cut, so a target exists.
        auto& blob = part.blobs[target];
        for (int v : residual) {
            part.blob_of[v] = target;
            blob.push_back(v);
        }
        std::sort(blob.begin(), blob.end());
    }
    return part;
}

AuxiliaryBlobGraph auxiliary_blob_graph(const PerturbedGraph& pg, const BlobPartition& part) {
    const Graph& merged = pg.merged;
    if (static_cast<int>(part.blob_of.size()) != merged.n)
        throw domain_error("partition does not cover the perturbed graph's vertex set");
    for (int v = 0; v < merged.n; ++v)
        if (part.blob_of[v] < 0 || part.blob_of[v] >= part.count())
            throw domain_error("partition leaves vertex " + std::to_string(v) + " unassigned");

    AuxiliaryBlobGraph aux;
    for (int u = 0; u < merged.n; ++u) {
        for (int v : merged.adj[u]) {
            if (v < u) continue;
            const int i = part.blob_of[u];
            const int j = part.blob_of[v];
            if (i == j) continue;
            const Edge key{std::min(i, j), std::max(i, j)};
            if (!aux.witness.count(key))
                aux.witness[key] = part.blob_of[u] == key.first ? Edge{u, v} : Edge{v, u};
        }
    }
    std::vector<Edge> edges;
    edges.reserve(aux.witness.size());
    for (const auto& [key, w] : aux.witness) edges.push_back(key);
    aux.graph = make_graph(part.count(), edges);
    return aux;
}

}  // namespace gstar
