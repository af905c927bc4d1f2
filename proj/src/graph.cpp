#include "gstar/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "gstar/rng.hpp"

namespace gstar {

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw domain_error("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw domain_error("edge endpoint out of range");
        if (u == v) throw domain_error("self-loops are not allowed");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw domain_error("duplicate edge");
    }
    g.m = edges.size();
    return g;
}

BaseKind base_kind_from_string(const std::string& s) {
    if (s == "path") return BaseKind::path;
    if (s == "cycle") return BaseKind::cycle;
    if (s == "star") return BaseKind::star;
    if (s == "complete") return BaseKind::complete;
    if (s == "binary_tree") return BaseKind::binary_tree;
    if (s == "two_clique_bridge") return BaseKind::two_clique_bridge;
    if (s == "grid") return BaseKind::grid;
    if (s == "random_tree") return BaseKind::random_tree;
    throw domain_error("unknown base graph kind: " + s);
}

std::string to_string(BaseKind kind) {
    switch (kind) {
        case BaseKind::path: return "path";
        case BaseKind::cycle: return "cycle";
        case BaseKind::star: return "star";
        case BaseKind::complete: return "complete";
        case BaseKind::binary_tree: return "binary_tree";
        case BaseKind::two_clique_bridge: return "two_clique_bridge";
        case BaseKind::grid: return "grid";
        case BaseKind::random_tree: return "random_tree";
    }
    return "?";
}

namespace {

Graph pruefer_tree(int n, std::uint64_t seed) {
    if (n <= 1) return make_graph(n, {});
    if (n == 2) return make_graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(n - 2);
    for (auto& c : code) c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // Standard Pruefer decoding with a pointer/leaf scan.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return make_graph(n, edges);
}

}  // namespace

Graph generate_base(BaseKind kind, int n, std::optional<std::uint64_t> seed) {
    if (n < 1) throw domain_error("base graph needs n >= 1");
    std::vector<Edge> edges;
    switch (kind) {
        case BaseKind::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return make_graph(n, edges);
        case BaseKind::cycle:
            if (n < 3) throw domain_error("cycle needs n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            return make_graph(n, edges);
        case BaseKind::star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return make_graph(n, edges);
        case BaseKind::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return make_graph(n, edges);
        case BaseKind::binary_tree: {
            // Complete binary tree: children of i are 2i+1 and 2i+2.
            int x = n + 1;
            if (n < 1 || (x & (x - 1)) != 0)
                throw domain_error("binary_tree needs n = 2^h - 1");
            for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
            return make_graph(n, edges);
        }
        case BaseKind::two_clique_bridge: {
            if (n < 2 || n % 2 != 0)
                throw domain_error("two_clique_bridge needs even n >= 2");
            const int h = n / 2;
            for (int i = 0; i < h; ++i)
                for (int j = i + 1; j < h; ++j) edges.emplace_back(i, j);
            for (int i = h; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            edges.emplace_back(h - 1, h);
            return make_graph(n, edges);
        }
        case BaseKind::grid: {
            const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
            if (r * r != n) throw domain_error("grid needs n to be a perfect square");
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    const int v = i * r + j;
                    if (j + 1 < r) edges.emplace_back(v, v + 1);
                    if (i + 1 < r) edges.emplace_back(v, v + r);
                }
            return make_graph(n, edges);
        }
        case BaseKind::random_tree:
            if (!seed) throw domain_error("random_tree needs a seed");
            return pruefer_tree(n, *seed);
    }
    throw domain_error("unknown base graph kind");
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < g.n; ++v)
        if (dist[v] < 0) return false;
    return true;
}

int degeneracy(const Graph& g) {
    if (g.n == 0) return 0;
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    // Bucket queue peel: O(n + m).
    const int maxd = g.max_degree();
    std::vector<std::vector<int>> buckets(maxd + 1);
    for (int v = 0; v < g.n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(g.n, 0);
    int result = 0;
    int cur = 0;
    for (int removed_count = 0; removed_count < g.n;) {
        while (cur <= maxd && buckets[cur].empty()) ++cur;
        if (cur > maxd) break;
        int v = buckets[cur].back();
        buckets[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale entry
        removed[v] = 1;
        ++removed_count;
        result = std::max(result, cur);
        for (int u : g.adj[v]) {
            if (!removed[u]) {
                --deg[u];
                buckets[deg[u]].push_back(u);
                if (deg[u] < cur) cur = deg[u];
            }
        }
    }
    return result;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue;
    queue.reserve(g.n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    if (g.n == 0) throw domain_error("diameter of an empty graph is undefined");
    if (!is_connected(g)) throw domain_error("diameter requires a connected graph");
    int best = 0;
    std::vector<int> dist(g.n);
    std::vector<int> queue(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue[0] = s;
        std::size_t size = 1;
        for (std::size_t head = 0; head < size; ++head) {
            const int u = queue[head];
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    best = std::max(best, dist[v]);
                    queue[size++] = v;
                }
            }
        }
    }
    return best;
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw domain_error("edge list: failed to read header 'n m'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw domain_error("edge list: failed to read edge " + std::to_string(i + 1));
        if (u >= v)
            throw domain_error("edge list: edges must satisfy u < v (edge " +
                               std::to_string(i + 1) + ")");
        edges.emplace_back(u, v);
    }
    return make_graph(n, edges);  // re-validates range/duplicates
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

}  // namespace gstar
