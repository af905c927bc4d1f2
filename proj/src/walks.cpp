#include "gstar/walks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "gstar/rng.hpp"

namespace gstar {

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
}

void parallel_rows(int n, int threads, const std::function<void(int, int)>& body) {
    threads = std::min(threads, n);
    if (threads <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

TransitionOperator TransitionOperator::build(const Graph& g) {
    if (g.n > kDenseWalkLimit)
        throw capability_error("dense transition operator limited to n <= " +
                               std::to_string(kDenseWalkLimit));
    TransitionOperator op;
    op.n = g.n;
    op.p.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) == 0) throw domain_error("lazy walk needs minimum degree >= 1");
        op.p[static_cast<std::size_t>(u) * g.n + u] = 0.5;
        const double step = 0.5 / static_cast<double>(g.degree(u));
        for (int v : g.adj[u]) op.p[static_cast<std::size_t>(u) * g.n + v] = step;
    }
    return op;
}

std::vector<double> stationary(const Graph& g) {
    if (!is_connected(g)) throw domain_error("stationary distribution needs a connected graph");
    if (g.m == 0) throw domain_error("stationary distribution needs at least one edge");
    std::vector<double> pi(g.n);
    const double two_m = 2.0 * static_cast<double>(g.m);
    for (int u = 0; u < g.n; ++u) pi[u] = static_cast<double>(g.degree(u)) / two_m;
    return pi;
}

double total_variation(const std::vector<double>& p1, const std::vector<double>& p2) {
    double sum = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) sum += std::abs(p1[i] - p2[i]);
    return 0.5 * sum;
}

MixingResult mixing_time_exact(const Graph& g, int threads) {
    if (!is_connected(g)) throw domain_error("mixing time needs a connected graph");
    if (g.n > kDenseWalkLimit)
        throw capability_error("exact mixing time limited to n <= " +
                               std::to_string(kDenseWalkLimit) +
                               "; use mixing_bounds or empirical_mixing_estimate");
    const int n = g.n;
    const auto pi = stationary(g);
    std::vector<double> inv2deg(n);
    for (int v = 0; v < n; ++v) inv2deg[v] = 0.5 / static_cast<double>(g.degree(v));

    // X holds one distribution row per start vertex; row u at step t is e_u P^t.
    std::vector<double> X(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u) {
        double* row = &X[static_cast<std::size_t>(u) * n];
        row[u] = 0.5;
        for (int v : g.adj[u]) row[v] = inv2deg[u];
    }

    const int nthreads = resolve_threads(threads);
    MixingResult res;
    std::vector<double> scratch_tv(n, 0.0);

    for (int t = 1;; ++t) {
        parallel_rows(n, nthreads, [&](int lo, int hi) {
            for (int u = lo; u < hi; ++u) {
                const double* row = &X[static_cast<std::size_t>(u) * n];
                double s = 0.0;
                for (int v = 0; v < n; ++v) s += std::abs(row[v] - pi[v]);
                scratch_tv[u] = 0.5 * s;
            }
        });
        const double tv = *std::max_element(scratch_tv.begin(), scratch_tv.end());
        res.tv_trajectory.push_back(tv);
        if (std::abs(tv - 0.25) <= kMixingGuard) res.boundary_flag = true;
        if (tv <= 0.25 - kMixingGuard) {
            res.t_mix = t;
            return res;
        }
        if (t >= kMixingStepCap)
            throw capability_error("mixing time exceeds step cap " +
                                   std::to_string(kMixingStepCap));

        // One lazy step for every row: y(v) = x(v)/2 + sum_{u ~ v} x(u)/(2 deg u).
        parallel_rows(n, nthreads, [&](int lo, int hi) {
            std::vector<double> y(n);
            for (int u = lo; u < hi; ++u) {
                double* row = &X[static_cast<std::size_t>(u) * n];
                for (int v = 0; v < n; ++v) {
                    double acc = 0.5 * row[v];
                    for (int w : g.adj[v]) acc += row[w] * inv2deg[w];
                    y[v] = acc;
                }
                std::copy(y.begin(), y.end(), row);
            }
        });
    }
}

namespace {

int fr_band_count(const Graph& g, std::int64_t two_m) {
    std::int64_t deg_min = g.degree(0);
    for (int v = 1; v < g.n; ++v) deg_min = std::min<std::int64_t>(deg_min, g.degree(v));
    int j = 0;
    while ((static_cast<std::int64_t>(1) << j) * deg_min < two_m) ++j;
    return std::max(j, 1);
}

double phi_of(std::int64_t bnd, std::int64_t vol, std::int64_t two_m) {
    return static_cast<double>(bnd) * (static_cast<double>(two_m) / 2.0) /
           (static_cast<double>(vol) * static_cast<double>(two_m - vol));
}

}  // namespace

MixingBounds mixing_bounds(const Graph& g) {
    if (!is_connected(g)) throw domain_error("mixing bounds need a connected graph");
    if (g.m == 0) throw domain_error("mixing bounds need at least one edge");
    MixingBounds b;
    const double log_n = std::log(static_cast<double>(g.n));
    const std::int64_t two_m = 2 * static_cast<std::int64_t>(g.m);

    if (g.n <= kConnectedEnumLimit) {
        b.exact = true;
        b.profile = conductance_profile(g, /*restrict_connected=*/true);
        b.fr_sum = 0.0;
        for (const auto& band : b.profile) b.fr_sum += 1.0 / (band.phi * band.phi);

        // Global conductance minimum over all sets with pi(S) <= 1/2.
        double phi_min = 1.0;
        bool found = false;
        std::vector<char> in_S(g.n, 0);
        std::vector<int> cnt(g.n, 0);
        std::int64_t e_in = 0, vol = 0;
        const std::uint32_t total = 1u << g.n;
        for (std::uint32_t i = 1; i < total; ++i) {
            const int v = std::countr_zero(i);
            if (!in_S[v]) {
                in_S[v] = 1;
                vol += g.degree(v);
                e_in += cnt[v];
                for (int u : g.adj[v]) ++cnt[u];
            } else {
                in_S[v] = 0;
                vol -= g.degree(v);
                e_in -= cnt[v];
                for (int u : g.adj[v]) --cnt[u];
            }
            if (vol >= 1 && 2 * vol <= two_m) {
                const double phi = phi_of(vol - 2 * e_in, vol, two_m);
                if (!found || phi < phi_min) {
                    phi_min = phi;
                    found = true;
                }
            }
        }
        b.phi_min = phi_min;
        b.js_value = log_n / (phi_min * phi_min);
        return b;
    }

    // Approximate mode: candidates restricted to spectral sweep prefixes.
    b.exact = false;
    std::vector<int> order = spectral_vertex_order(g);
    const int J = fr_band_count(g, two_m);
    std::vector<double> band_phi(J + 1, -1.0);
    double phi_min = 1.0;
    bool found = false;
    std::vector<char> in_prefix(g.n, 0);
    std::int64_t vol = 0, e_in = 0;
    for (int i = 0; i + 1 < g.n; ++i) {
        const int v = order[i];
        std::int64_t inside = 0;
        for (int u : g.adj[v])
            if (in_prefix[u]) ++inside;
        in_prefix[v] = 1;
        vol += g.degree(v);
        e_in += inside;
        const std::int64_t bnd = vol - 2 * e_in;
        // Phi(S) = Phi(S^c); band-assign by the side with pi <= 1/2.
        const std::int64_t side_vol = std::min(vol, two_m - vol);
        if (side_vol < 1) continue;
        const double phi = phi_of(bnd, vol, two_m);
        if (!found || phi < phi_min) {
            phi_min = phi;
            found = true;
        }
        for (int j = 1; j <= J; ++j) {
            const __int128 lhs = static_cast<__int128>(side_vol) << j;
            if (lhs <= two_m && (lhs << 1) >= two_m) {
                if (band_phi[j] < 0 || phi < band_phi[j]) band_phi[j] = phi;
            }
        }
    }
    b.fr_sum = 0.0;
    for (int j = 1; j <= J; ++j) {
        ConductanceBand band;
        band.j = j;
        band.p = std::ldexp(1.0, -j);
        band.empty_band = band_phi[j] < 0;
        band.phi = band.empty_band ? 1.0 : band_phi[j];
        b.profile.push_back(band);
        b.fr_sum += 1.0 / (band.phi * band.phi);
    }
    b.phi_min = phi_min;
    b.js_value = log_n / (phi_min * phi_min);
    return b;
}

EmpiricalMixingEstimate empirical_mixing_estimate(const Graph& g, int walkers, int horizon,
                                                  std::uint64_t seed) {
    if (!is_connected(g)) throw domain_error("mixing estimate needs a connected graph");
    if (walkers < 1) throw domain_error("walkers must be positive");
    if (horizon < 1) throw domain_error("horizon must be positive");
    const auto pi = stationary(g);

    // Double-BFS eccentricity heuristic for worst-suspect starts.
    auto far_from = [&](int src) {
        auto dist = bfs_distances(g, src);
        int best = src;
        for (int v = 0; v < g.n; ++v)
            if (dist[v] > dist[best]) best = v;
        return best;
    };
    const int u = far_from(0);
    const int w = far_from(u);
    std::vector<int> starts{u};
    if (w != u) starts.push_back(w);
    std::sort(starts.begin(), starts.end());

    // Geometrically spaced checkpoints.
    std::vector<int> checkpoints;
    for (int t = 1; t <= horizon;) {
        checkpoints.push_back(t);
        t = std::max(t + 1, static_cast<int>(static_cast<double>(t) * 1.25));
    }

    EmpiricalMixingEstimate est;
    est.walkers = walkers;
    est.horizon = horizon;
    est.starts = starts;
    est.note = "empirical TV has positive bias of order sqrt(n/walkers); not an exact value";

    // Per-start walker positions and generators.
    const std::size_t ns = starts.size();
    std::vector<std::vector<int>> pos(ns, std::vector<int>(walkers));
    std::vector<std::vector<Rng>> rngs;
    rngs.reserve(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        std::fill(pos[s].begin(), pos[s].end(), starts[s]);
        std::vector<Rng> row;
        row.reserve(walkers);
        for (int i = 0; i < walkers; ++i)
            row.emplace_back(derive_seed(seed, {static_cast<std::uint64_t>(starts[s]),
                                                static_cast<std::uint64_t>(i)}));
        rngs.push_back(std::move(row));
    }

    int prev_t = 0;
    std::vector<std::int64_t> counts(g.n);
    for (int cp : checkpoints) {
        const int steps = cp - prev_t;
        prev_t = cp;
        double worst = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
            for (int i = 0; i < walkers; ++i) {
                int p = pos[s][i];
                Rng& rng = rngs[s][i];
                for (int step = 0; step < steps; ++step) {
                    if (rng.next_below(2) == 0) continue;  // lazy half-step
                    const auto& nb = g.adj[p];
                    p = nb[rng.next_below(nb.size())];
                }
                pos[s][i] = p;
            }
            std::fill(counts.begin(), counts.end(), 0);
            for (int i = 0; i < walkers; ++i) ++counts[pos[s][i]];
            double tv = 0.0;
            for (int v = 0; v < g.n; ++v)
                tv += std::abs(static_cast<double>(counts[v]) / walkers - pi[v]);
            worst = std::max(worst, 0.5 * tv);
        }
        est.checkpoints.emplace_back(cp, worst);
        if (worst <= 0.25) {
            est.mixed = true;
            est.t_estimate = cp;
            return est;
        }
    }
    est.mixed = false;
    est.t_estimate = 0;
    est.note = "not mixed by horizon; " + est.note;
    return est;
}

WalkAnalysis analyze_walk(const Graph& g, int threads) {
    WalkAnalysis a;
    a.pi = stationary(g);
    a.pi_min = *std::min_element(a.pi.begin(), a.pi.end());
    const auto mix = mixing_time_exact(g, threads);
    a.t_mix = mix.t_mix;
    a.t_mix_boundary_flag = mix.boundary_flag;
    const auto b = mixing_bounds(g);
    a.fr_sum = b.fr_sum;
    a.js_value = b.js_value;
    a.bounds_exact = b.exact;
    return a;
}

}  // namespace gstar
