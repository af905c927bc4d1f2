#pragma once

// Undirected simple graphs as sorted adjacency lists, deterministic base-graph
// generators, and elementary measurements (connectivity, diameter, degeneracy).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstar/errors.hpp"

namespace gstar {

using Edge = std::pair<int, int>;  // always stored with first < second

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // per-vertex sorted neighbor lists
    std::size_t m = 0;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;  // binary search, O(log deg)
    std::vector<Edge> edges() const;    // sorted, u < v
};

// Builds a Graph from an edge list; validates labels, rejects self-loops and
// duplicate edges.
Graph make_graph(int n, const std::vector<Edge>& edges);

enum class BaseKind {
    path,
    cycle,
    star,
    complete,
    binary_tree,
    two_clique_bridge,
    grid,
    random_tree,
};

BaseKind base_kind_from_string(const std::string& s);
std::string to_string(BaseKind kind);

// Deterministic generators. seed is consumed only by random_tree (uniform
// labeled tree via a random Pruefer sequence).
Graph generate_base(BaseKind kind, int n, std::optional<std::uint64_t> seed = std::nullopt);

bool is_connected(const Graph& g);

// Minimum D such that every subgraph has a vertex of degree <= D, computed by
// min-degree peeling (smallest label first among ties).
int degeneracy(const Graph& g);

// Exact diameter via all-sources BFS. Throws domain_error on disconnected input.
int diameter(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int source);

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// ASCII decimal. Reader rejects self-loops, duplicates and malformed lines.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace gstar
