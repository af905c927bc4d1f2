#include "gstar/longpath.hpp"

#include <algorithm>
#include <bit>

#include "gstar/rng.hpp"

namespace gstar {

std::string to_string(PathMethod m) {
    switch (m) {
        case PathMethod::exact: return "exact";
        case PathMethod::blob_heuristic: return "blob_heuristic";
        case PathMethod::dfs_fallback: return "dfs_fallback";
    }
    return "?";
}

bool path_is_valid(const Graph& g, const PathWitness& w) {
    if (w.vertices.empty()) return false;
    if (w.length != static_cast<int>(w.vertices.size()) - 1) return false;
    std::vector<char> seen(g.n, 0);
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        const int v = w.vertices[i];
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !g.has_edge(w.vertices[i - 1], v)) return false;
    }
    return true;
}

PathWitness longest_path_exact(const Graph& g) {
    if (g.n > kExactPathLimit)
        throw capability_error("exact longest path limited to n <= " +
                               std::to_string(kExactPathLimit));
    if (g.n < 1) throw domain_error("longest path needs a nonempty graph");
    const int n = g.n;
    const std::uint32_t total = 1u << n;
    // dp[mask] = bitmask of vertices that end a simple path covering mask.
    std::vector<std::uint32_t> dp(total, 0);
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;

    int best_pop = 1;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        best_pop = std::max(best_pop, std::popcount(mask));
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            for (int u : g.adj[v])
                if (!(mask & (1u << u))) dp[mask | (1u << u)] |= 1u << u;
        }
    }

    // Deterministic pick: smallest endpoint, then smallest mask, then greedy
    // smallest predecessor while walking the path backwards.
    int best_v = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (std::popcount(mask) != best_pop || !dp[mask]) continue;
        const int v = std::countr_zero(dp[mask]);
        if (best_v < 0 || v < best_v || (v == best_v && mask < best_mask)) {
            best_v = v;
            best_mask = mask;
        }
    }

    std::vector<int> rev{best_v};
    std::uint32_t mask = best_mask;
    int v = best_v;
    while (std::popcount(mask) > 1) {
        const std::uint32_t prev_mask = mask ^ (1u << v);
        int next = -1;
        for (int u : g.adj[v]) {
            if ((prev_mask & (1u << u)) && (dp[prev_mask] & (1u << u))) {
                next = u;
                break;  // adjacency sorted: first hit is the smallest
            }
        }
        mask = prev_mask;
        v = next;
        rev.push_back(v);
    }
    std::reverse(rev.begin(), rev.end());

    PathWitness w;
    w.vertices = std::move(rev);
    w.length = static_cast<int>(w.vertices.size()) - 1;
    w.method = PathMethod::exact;
    return w;
}

namespace {

// Deepest root-to-vertex paths over randomized DFS restarts. Vertices are
// claimed at pop time so the traversal is a genuine depth-first tree.
std::vector<int> randomized_dfs_longest(const Graph& g, Rng& rng, int restarts) {
    std::vector<int> best;
    std::vector<int> parent(g.n), depth(g.n);
    std::vector<char> visited(g.n);
    std::vector<std::pair<int, int>> stack;  // (vertex, parent)
    std::vector<int> nbr;
    for (int r = 0; r < restarts; ++r) {
        const int root = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n)));
        std::fill(visited.begin(), visited.end(), 0);
        stack.assign(1, {root, -1});
        int deepest = root;
        depth[root] = 0;
        while (!stack.empty()) {
            const auto [x, p] = stack.back();
            stack.pop_back();
            if (visited[x]) continue;
            visited[x] = 1;
            parent[x] = p;
            depth[x] = p < 0 ? 0 : depth[p] + 1;
            if (depth[x] > depth[deepest] || (depth[x] == depth[deepest] && x < deepest))
                deepest = x;
            nbr.clear();
            for (int u : g.adj[x])
                if (!visited[u]) nbr.push_back(u);
            rng.shuffle(nbr);
            for (int u : nbr) stack.emplace_back(u, x);
        }
        std::vector<int> path;
        for (int x = deepest; x >= 0; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        if (path.size() > best.size() || (path.size() == best.size() && path < best))
            best = std::move(path);
    }
    return best;
}

// BFS inside one blob along base edges; returns the path from src to dst.
std::vector<int> route_in_blob(const Graph& base, const std::vector<int>& blob_of, int blob,
                               int src, int dst) {
    if (src == dst) return {src};
    std::vector<int> queue{src};
    std::vector<int> parent(base.n, -2);
    parent[src] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int u : base.adj[x]) {
            if (blob_of[u] == blob && parent[u] == -2) {
                parent[u] = x;
                if (u == dst) {
                    std::vector<int> path;
                    for (int w = dst; w >= 0; w = parent[w]) path.push_back(w);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(u);
            }
        }
    }
    throw domain_error("blob is not connected in the base graph");
}

// Farthest vertex from src within the blob (base edges), smallest label first.
int blob_far_vertex(const Graph& base, const std::vector<int>& blob_of, int blob, int src) {
    std::vector<int> queue{src};
    std::vector<int> dist(base.n, -1);
    dist[src] = 0;
    int best = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        if (dist[x] > dist[best] || (dist[x] == dist[best] && x < best)) best = x;
        for (int u : base.adj[x])
            if (blob_of[u] == blob && dist[u] < 0) {
                dist[u] = dist[x] + 1;
                queue.push_back(u);
            }
    }
    return best;
}

PathWitness double_bfs_fallback(const Graph& g) {
    auto dist0 = bfs_distances(g, 0);
    int u = 0;
    for (int v = 0; v < g.n; ++v)
        if (dist0[v] > dist0[u]) u = v;
    std::vector<int> queue{u};
    std::vector<int> parent(g.n, -2), dist(g.n, -1);
    parent[u] = -1;
    dist[u] = 0;
    int far = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        if (dist[x] > dist[far]) far = x;
        for (int w : g.adj[x])
            if (parent[w] == -2) {
                parent[w] = x;
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
    }
    PathWitness w;
    for (int x = far; x >= 0; x = parent[x]) w.vertices.push_back(x);
    std::reverse(w.vertices.begin(), w.vertices.end());
    w.length = static_cast<int>(w.vertices.size()) - 1;
    w.method = PathMethod::dfs_fallback;
    return w;
}

}  // namespace

PathWitness long_path_blob_heuristic(const PerturbedGraph& pg, int k, std::uint64_t seed) {
    const Graph& base = pg.base;
    const Graph& merged = pg.merged;
    const BlobPartition part = blob_partition(base, k);
    const AuxiliaryBlobGraph aux = auxiliary_blob_graph(pg, part);

    std::vector<int> aux_path;
    if (aux.graph.n > 1 && aux.graph.m > 0) {
        Rng rng(derive_seed(seed, {0x61757864667331ULL}));
        aux_path = randomized_dfs_longest(aux.graph, rng, 10);
    }
    if (aux_path.size() < 2) return double_bfs_fallback(merged);

    const int L = static_cast<int>(aux_path.size()) - 1;
    // Witness vertices for each crossing: exit[i] in blob aux_path[i] is
    // adjacent (in merged) to entry[i+1] in blob aux_path[i+1].
    std::vector<int> exit_v(L), entry_v(L + 1);
    for (int i = 0; i < L; ++i) {
        const int bi = aux_path[i], bj = aux_path[i + 1];
        const Edge key{std::min(bi, bj), std::max(bi, bj)};
        const Edge wit = aux.witness.at(key);
        if (bi == key.first) {
            exit_v[i] = wit.first;
            entry_v[i + 1] = wit.second;
        } else {
            exit_v[i] = wit.second;
            entry_v[i + 1] = wit.first;
        }
    }
    entry_v[0] = blob_far_vertex(base, part.blob_of, aux_path[0], exit_v[0]);
    const int last_entry = entry_v[L];
    const int last_far = blob_far_vertex(base, part.blob_of, aux_path[L], last_entry);

    PathWitness w;
    w.method = PathMethod::blob_heuristic;
    for (int i = 0; i <= L; ++i) {
        const int blob = aux_path[i];
        const int from = entry_v[i];
        const int to = i < L ? exit_v[i] : last_far;
        auto seg = route_in_blob(base, part.blob_of, blob, from, to);
        w.vertices.insert(w.vertices.end(), seg.begin(), seg.end());
    }
    w.length = static_cast<int>(w.vertices.size()) - 1;

    if (!path_is_valid(merged, w) || w.length < L)
        throw domain_error("blob heuristic produced an invalid path");
    return w;
}

}  // namespace gstar
