#pragma once

// The random perturbation G* = G u R with R ~ G(n, eps/n): every vertex pair
// becomes a random edge independently with probability eps/n.

#include <cstdint>
#include <optional>
#include <vector>

#include "gstar/graph.hpp"

namespace gstar {

struct PerturbationParams {
    double eps = 0.0;
    std::uint64_t seed = 0;
    // If set, eps is recomputed per graph as n^(-a); requires a in (0,1).
    std::optional<double> eps_exponent;

    // eps actually used for an n-vertex graph.
    double effective_eps(int n) const;
};

struct PerturbedGraph {
    Graph base;
    std::vector<Edge> random_edges;  // sampled pairs, sorted, may duplicate base edges
    Graph merged;                    // base u random_edges with duplicates collapsed
};

// Samples R and returns {base, R, base u R}. Deterministic given (g, params).
//
// Sampling: |R| ~ Binomial(C(n,2), eps/n), then |R| distinct pair indices
// uniformly; identical in distribution to C(n,2) independent Bernoulli draws
// but O(|R|) expected time. Pairs that duplicate base edges stay recorded in
// random_edges and collapse in merged.
PerturbedGraph perturb(const Graph& g, const PerturbationParams& params);

}  // namespace gstar
