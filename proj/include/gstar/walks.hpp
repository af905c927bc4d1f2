#pragma once

// Lazy random walk analysis: transition operator, stationary distribution,
// exact total-variation mixing time, the banded conductance-sum bound and the
// log n / Phi^2 bound, plus a sampling-based estimator for graphs too large
// for the exact computation.

#include <cstdint>
#include <string>
#include <vector>

#include "gstar/expansion.hpp"
#include "gstar/graph.hpp"

namespace gstar {

// Dense distribution-matrix iteration is allowed up to this size.
inline constexpr int kDenseWalkLimit = 4096;
// mixing_time_exact gives up past this many lazy steps.
inline constexpr int kMixingStepCap = 1000000;
// Guard band around the 1/4 mixing threshold.
inline constexpr double kMixingGuard = 1e-9;

// Row-stochastic lazy walk matrix: P(u,u) = 1/2, P(u,v) = 1/(2 deg u).
struct TransitionOperator {
    int n = 0;
    std::vector<double> p;  // row-major n*n

    double at(int u, int v) const { return p[static_cast<std::size_t>(u) * n + v]; }
    static TransitionOperator build(const Graph& g);
};

// pi(u) = deg(u) / (2m). Throws on disconnected input.
std::vector<double> stationary(const Graph& g);

// Half-L1 total variation distance between two distributions.
double total_variation(const std::vector<double>& p1, const std::vector<double>& p2);

struct MixingResult {
    int t_mix = 0;
    bool boundary_flag = false;          // some step's TV fell within the guard band of 1/4
    std::vector<double> tv_trajectory;   // worst-start TV at t = 1, 2, ...
};

// Smallest t with max over point-mass starts of TV(x0 P^t, pi) <= 1/4.
// Point masses suffice: TV(x0 P^t, pi) is convex in x0, so the supremum over
// all start distributions is attained at a vertex of the simplex.
// threads = 0 picks a machine default.
MixingResult mixing_time_exact(const Graph& g, int threads = 0);

struct MixingBounds {
    double fr_sum = 0.0;    // sum over bands j of Phi(2^-j)^-2
    double js_value = 0.0;  // log(n) / Phi_min^2 over sets with pi(S) <= 1/2
    bool exact = true;      // false: both derived from sweep-cut prefixes
    std::vector<ConductanceBand> profile;
    double phi_min = 1.0;
};

MixingBounds mixing_bounds(const Graph& g);

struct EmpiricalMixingEstimate {
    bool mixed = false;
    int t_estimate = 0;  // first checkpoint with empirical TV <= 1/4
    std::vector<std::pair<int, double>> checkpoints;  // (t, max-over-starts TV)
    std::vector<int> starts;
    int walkers = 0;
    int horizon = 0;
    std::string note;
};

// Independent lazy walks from suspected-worst starts (double-BFS endpoints),
// empirical TV against pi at geometrically spaced checkpoints. An estimate
// with positive bias of order sqrt(n/walkers); never treated as exact.
EmpiricalMixingEstimate empirical_mixing_estimate(const Graph& g, int walkers, int horizon,
                                                  std::uint64_t seed);

struct WalkAnalysis {
    std::vector<double> pi;
    double pi_min = 0.0;
    int t_mix = 0;
    double fr_sum = 0.0;
    double js_value = 0.0;
    bool bounds_exact = true;
    bool t_mix_boundary_flag = false;
};

// Convenience: stationary + exact mixing time + both bounds.
WalkAnalysis analyze_walk(const Graph& g, int threads = 0);

}  // namespace gstar
