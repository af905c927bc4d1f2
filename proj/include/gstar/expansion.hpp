#pragma once

// Exact isoperimetric quantities: per-set cut statistics, the edge and vertex
// isoperimetric numbers (exhaustive at small n), normalized expansion
// profiles, the banded conductance profile over connected sets, and a
// spectral sweep-cut upper bound for large graphs.

#include <cstdint>
#include <functional>
#include <vector>

#include "gstar/graph.hpp"

namespace gstar {

// All-subset Gray-code scans are exact up to this size.
inline constexpr int kExhaustiveSubsetLimit = 24;
// Connected-set enumeration (conductance profile) is exact up to this size.
inline constexpr int kConnectedEnumLimit = 18;

struct CutStats {
    std::vector<int> S;
    std::int64_t size = 0;
    std::int64_t e_S = 0;             // edges inside S
    std::int64_t boundary_edges = 0;  // |dS|
    std::int64_t neighborhood = 0;    // |N(S)|
    double pi_S = 0.0;                // (2 e(S) + |dS|) / (2 e(G))
    double Q_S = 0.0;                 // |dS| / (4 e(G))
    double phi_S = 0.0;               // Q(S) / (pi(S) pi(S^c))
};

CutStats cut_stats(const Graph& g, const std::vector<int>& S);

// The second conductance expression, |dS| / (2 (2e(S)+|dS|) pi(S^c)),
// computed from the stats record alone; agrees with phi_S.
double conductance_formula_b(const CutStats& s);

struct IsoperimetricResult {
    double value = 0.0;
    std::vector<int> witness;  // smallest then lexicographically least argmin
};

// min |dS|/|S| over nonempty S with |S| <= max_frac * n, exhaustively.
IsoperimetricResult edge_isoperimetric_exact(const Graph& g, double max_frac = 0.5);

// min |N(S)|/|S| over the same family.
IsoperimetricResult vertex_isoperimetric_exact(const Graph& g, double max_frac = 0.5);

struct ProfileEntry {
    int s = 0;
    std::int64_t min_boundary = 0;
    double value = 0.0;  // min_boundary * log(e n / s) / s (natural log)
};

// For each set size s <= alpha*n, the minimum boundary over sets of that
// exact size, normalized by s / log(en/s).
std::vector<ProfileEntry> expansion_profile(const Graph& g, double alpha);

struct ConductanceBand {
    int j = 0;
    double p = 0.0;    // 2^-j; band is pi(S) in [p/2, p], inclusive
    double phi = 1.0;  // 1 when the band holds no candidate set
    bool empty_band = true;
};

// Phi(2^-j) for j = 1..ceil(log2(1/pi_min)): the minimum conductance over
// sets whose stationary mass falls in [2^-j-1, 2^-j]. Band membership is
// decided in exact integer arithmetic. restrict_connected limits candidates
// to sets connected in g.
std::vector<ConductanceBand> conductance_profile(const Graph& g, bool restrict_connected);

struct SweepCutResult {
    double value = 0.0;
    std::vector<int> witness;
    bool converged = true;  // false: iteration cap hit; value still an upper bound
};

// Approximate second eigenvector of the lazy normalized adjacency operator by
// deflated power iteration, then the best prefix cut of the induced vertex
// order. Always an upper bound on the edge isoperimetric number.
SweepCutResult sweep_cut_upper_bound(const Graph& g);

// The vertex order behind the sweep cut: sorted by the D^{-1/2}-transformed
// approximate second eigenvector. Sets *converged to false when the power
// iteration hits its cap.
std::vector<int> spectral_vertex_order(const Graph& g, bool* converged = nullptr);

// Enumerates every connected vertex set (any size >= 1), calling
// f(members, e_inside, degree_volume) once per set. Exact; use only for
// n <= kConnectedEnumLimit unless the graph is known to be very sparse.
void for_each_connected_set(
    const Graph& g,
    const std::function<void(const std::vector<int>&, std::int64_t, std::int64_t)>& f);

}  // namespace gstar
