#include "gstar/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "gstar/rng.hpp"

namespace gstar {

namespace {

void require_proper_subset(const Graph& g, std::size_t size) {
    if (size == 0) throw domain_error("cut statistics need a nonempty set");
    if (size >= static_cast<std::size_t>(g.n))
        throw domain_error("cut statistics need a proper subset of the vertices");
}

// Gray-code walk over all nonempty subsets of V, maintaining |S|, e(S),
// vol(S) = sum of degrees, and |N(S)| with O(deg) work per flip.
// visit(mask, size, e_in, vol, nbhd) is called once per subset.
template <typename Visit>
void gray_scan(const Graph& g, Visit&& visit) {
    const int n = g.n;
    if (n > kExhaustiveSubsetLimit)
        throw capability_error("exhaustive subset scan limited to n <= " +
                               std::to_string(kExhaustiveSubsetLimit) +
                               "; use sweep_cut_upper_bound");
    std::vector<char> in_S(n, 0);
    std::vector<int> cnt(n, 0);  // neighbors currently inside S
    std::int64_t size = 0, e_in = 0, vol = 0, nbhd = 0;
    const std::uint32_t total = 1u << n;
    std::uint32_t mask = 0;
    for (std::uint32_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        mask ^= (1u << v);
        if (!in_S[v]) {
            if (cnt[v] > 0) --nbhd;
            in_S[v] = 1;
            ++size;
            vol += g.degree(v);
            e_in += cnt[v];
            for (int u : g.adj[v]) {
                if (!in_S[u] && cnt[u] == 0) ++nbhd;
                ++cnt[u];
            }
        } else {
            in_S[v] = 0;
            --size;
            vol -= g.degree(v);
            e_in -= cnt[v];
            for (int u : g.adj[v]) {
                --cnt[u];
                if (!in_S[u] && cnt[u] == 0) --nbhd;
            }
            if (cnt[v] > 0) ++nbhd;
        }
        visit(mask, size, e_in, vol, nbhd);
    }
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        const int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

// Lexicographic order on the sorted vertex sequences of two sets.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        const int va = std::countr_zero(a);
        const int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

struct ArgminTracker {
    std::int64_t num = -1, den = 1;  // value = num/den, -1 = unset
    std::int64_t size = 0;
    std::uint32_t mask = 0;

    void offer(std::int64_t n_, std::int64_t d_, std::int64_t size_, std::uint32_t mask_) {
        if (num < 0) {
            num = n_, den = d_, size = size_, mask = mask_;
            return;
        }
        const std::int64_t lhs = n_ * den, rhs = num * d_;
        if (lhs > rhs) return;
        if (lhs < rhs || size_ < size || (size_ == size && lex_less(mask_, mask))) {
            num = n_, den = d_, size = size_, mask = mask_;
        }
    }
};

IsoperimetricResult isoperimetric_scan(const Graph& g, double max_frac, bool vertex_version) {
    if (g.n < 2) throw domain_error("isoperimetric number needs n >= 2");
    if (!(max_frac > 0.0 && max_frac <= 1.0)) throw domain_error("max_frac must be in (0,1]");
    const auto smax = static_cast<std::int64_t>(
        std::floor(max_frac * static_cast<double>(g.n) + 1e-9));
    if (smax < 1) throw domain_error("max_frac admits no set on this graph");

    ArgminTracker best;
    gray_scan(g, [&](std::uint32_t mask, std::int64_t size, std::int64_t e_in, std::int64_t vol,
                     std::int64_t nbhd) {
        if (size < 1 || size > smax) return;
        const std::int64_t num = vertex_version ? nbhd : vol - 2 * e_in;
        best.offer(num, size, size, mask);
    });
    IsoperimetricResult r;
    r.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    r.witness = mask_to_set(best.mask);
    return r;
}

}  // namespace

CutStats cut_stats(const Graph& g, const std::vector<int>& S) {
    require_proper_subset(g, S.size());
    if (g.m == 0) throw domain_error("cut statistics need at least one edge");
    std::vector<char> in_S(g.n, 0);
    for (int v : S) {
        if (v < 0 || v >= g.n) throw domain_error("cut set vertex out of range");
        if (in_S[v]) throw domain_error("cut set has duplicate vertex");
        in_S[v] = 1;
    }
    CutStats st;
    st.S = S;
    std::sort(st.S.begin(), st.S.end());
    st.size = static_cast<std::int64_t>(S.size());
    std::int64_t vol = 0;
    std::vector<char> counted(g.n, 0);
    for (int v : st.S) {
        vol += g.degree(v);
        for (int u : g.adj[v]) {
            if (in_S[u]) {
                if (u > v) ++st.e_S;
            } else if (!counted[u]) {
                counted[u] = 1;
                ++st.neighborhood;
            }
        }
    }
    st.boundary_edges = vol - 2 * st.e_S;
    const double two_m = 2.0 * static_cast<double>(g.m);
    st.pi_S = static_cast<double>(vol) / two_m;
    st.Q_S = static_cast<double>(st.boundary_edges) / (2.0 * two_m);
    st.phi_S = st.Q_S / (st.pi_S * (1.0 - st.pi_S));
    return st;
}

double conductance_formula_b(const CutStats& s) {
    const double vol = static_cast<double>(2 * s.e_S + s.boundary_edges);
    return static_cast<double>(s.boundary_edges) / (2.0 * vol * (1.0 - s.pi_S));
}

IsoperimetricResult edge_isoperimetric_exact(const Graph& g, double max_frac) {
    return isoperimetric_scan(g, max_frac, false);
}

IsoperimetricResult vertex_isoperimetric_exact(const Graph& g, double max_frac) {
    return isoperimetric_scan(g, max_frac, true);
}

std::vector<ProfileEntry> expansion_profile(const Graph& g, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("alpha must be in (0,1)");
    if (!is_connected(g)) throw domain_error("expansion profile needs a connected graph");
    const auto smax =
        static_cast<int>(std::floor(alpha * static_cast<double>(g.n) + 1e-9));
    if (smax < 1) throw domain_error("alpha admits no set on this graph");

    std::vector<std::int64_t> min_b(smax + 1, -1);
    gray_scan(g, [&](std::uint32_t, std::int64_t size, std::int64_t e_in, std::int64_t vol,
                     std::int64_t) {
        if (size < 1 || size > smax) return;
        const std::int64_t bnd = vol - 2 * e_in;
        if (min_b[size] < 0 || bnd < min_b[size]) min_b[size] = bnd;
    });

    std::vector<ProfileEntry> out;
    for (int s = 1; s <= smax; ++s) {
        ProfileEntry e;
        e.s = s;
        e.min_boundary = min_b[s];
        e.value = static_cast<double>(min_b[s]) *
                  std::log(std::exp(1.0) * static_cast<double>(g.n) / static_cast<double>(s)) /
                  static_cast<double>(s);
        out.push_back(e);
    }
    return out;
}

namespace {

// Exact rational minimum tracker for Phi = bnd * m / (vol * (2m - vol)).
struct BandMin {
    std::int64_t bnd = -1, vol = 0;

    void offer(std::int64_t b, std::int64_t v, std::int64_t two_m) {
        if (bnd < 0) {
            bnd = b, vol = v;
            return;
        }
        // b / (v (2m - v))  <  bnd / (vol (2m - vol))  via 128-bit cross products
        const __int128 lhs = static_cast<__int128>(b) * vol * (two_m - vol);
        const __int128 rhs = static_cast<__int128>(bnd) * v * (two_m - v);
        if (lhs < rhs) bnd = b, vol = v;
    }

    double phi(std::int64_t two_m) const {
        if (bnd < 0) return 1.0;
        return static_cast<double>(bnd) * (static_cast<double>(two_m) / 2.0) /
               (static_cast<double>(vol) * static_cast<double>(two_m - vol));
    }
};

int band_count(const Graph& g) {
    // ceil(log2(1/pi_min)) with pi_min = deg_min / (2m), in integers.
    std::int64_t deg_min = g.n == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.n; ++v) deg_min = std::min<std::int64_t>(deg_min, g.degree(v));
    if (deg_min <= 0) throw domain_error("conductance profile needs minimum degree >= 1");
    const std::int64_t two_m = 2 * static_cast<std::int64_t>(g.m);
    int j = 0;
    while ((static_cast<std::int64_t>(1) << j) * deg_min < two_m) ++j;
    return std::max(j, 1);
}

}  // namespace

std::vector<ConductanceBand> conductance_profile(const Graph& g, bool restrict_connected) {
    if (!is_connected(g)) throw domain_error("conductance profile needs a connected graph");
    if (g.m == 0) throw domain_error("conductance profile needs at least one edge");
    const int limit = restrict_connected ? kConnectedEnumLimit : kExhaustiveSubsetLimit;
    if (g.n > limit)
        throw capability_error("conductance profile limited to n <= " + std::to_string(limit));

    const std::int64_t two_m = 2 * static_cast<std::int64_t>(g.m);
    const int J = band_count(g);
    std::vector<BandMin> mins(J + 1);

    auto classify = [&](std::int64_t e_in, std::int64_t vol) {
        if (vol <= 0 || vol >= two_m) return;  // pi in (0,1) only
        const std::int64_t bnd = vol - 2 * e_in;
        for (int j = 1; j <= J; ++j) {
            // pi <= 2^-j  <=>  vol * 2^j <= 2m ; pi >= 2^-(j+1) <=> vol * 2^(j+1) >= 2m
            const __int128 lhs = static_cast<__int128>(vol) << j;
            if (lhs <= two_m && (lhs << 1) >= two_m) mins[j].offer(bnd, vol, two_m);
        }
    };

    if (restrict_connected) {
        for_each_connected_set(g, [&](const std::vector<int>&, std::int64_t e_in,
                                      std::int64_t vol) { classify(e_in, vol); });
    } else {
        gray_scan(g, [&](std::uint32_t, std::int64_t size, std::int64_t e_in, std::int64_t vol,
                         std::int64_t) {
            if (size >= 1 && size < g.n) classify(e_in, vol);
        });
    }

    std::vector<ConductanceBand> out;
    for (int j = 1; j <= J; ++j) {
        ConductanceBand b;
        b.j = j;
        b.p = std::ldexp(1.0, -j);
        b.empty_band = mins[j].bnd < 0;
        b.phi = mins[j].phi(two_m);
        out.push_back(b);
    }
    return out;
}

std::vector<int> spectral_vertex_order(const Graph& g, bool* converged_out) {
    if (!is_connected(g)) throw domain_error("spectral order needs a connected graph");
    if (g.n < 2) throw domain_error("spectral order needs n >= 2");
    const int n = g.n;

    // Top eigenvector of the lazy normalized operator is sqrt(deg).
    std::vector<double> sqrt_deg(n), phi1(n);
    double norm1 = 0.0;
    for (int v = 0; v < n; ++v) {
        sqrt_deg[v] = std::sqrt(static_cast<double>(g.degree(v)));
        norm1 += static_cast<double>(g.degree(v));
    }
    norm1 = std::sqrt(norm1);
    for (int v = 0; v < n; ++v) phi1[v] = sqrt_deg[v] / norm1;

    // Deterministic pseudo-random start vector.
    std::vector<double> x(n), y(n);
    for (int v = 0; v < n; ++v) {
        const std::uint64_t h = splitmix64_mix(0x5eedULL + static_cast<std::uint64_t>(v));
        x[v] = static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5;
    }

    const int max_iters = 3000;
    const double tol = 1e-12;
    bool converged = false;
    auto deflate_normalize = [&](std::vector<double>& v) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * phi1[i];
        for (int i = 0; i < n; ++i) v[i] -= dot * phi1[i];
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += v[i] * v[i];
        nrm = std::sqrt(nrm);
        if (nrm > 0) {
            for (int i = 0; i < n; ++i) v[i] /= nrm;
        }
    };
    deflate_normalize(x);
    for (int it = 0; it < max_iters; ++it) {
        // y = (x + D^{-1/2} A D^{-1/2} x) / 2
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int u : g.adj[v]) acc += x[u] / sqrt_deg[u];
            y[v] = 0.5 * (x[v] + acc / sqrt_deg[v]);
        }
        deflate_normalize(y);
        double diff = 0.0;
        for (int v = 0; v < n; ++v) diff = std::max(diff, std::abs(y[v] - x[v]));
        x.swap(y);
        if (diff <= tol) {
            converged = true;
            break;
        }
    }
    if (converged_out) *converged_out = converged;

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ya = x[a] / sqrt_deg[a], yb = x[b] / sqrt_deg[b];
        if (ya != yb) return ya < yb;
        return a < b;
    });
    return order;
}

SweepCutResult sweep_cut_upper_bound(const Graph& g) {
    const int n = g.n;
    bool converged = false;
    std::vector<int> order = spectral_vertex_order(g, &converged);

    std::int64_t best_num = -1, best_den = 1;
    int best_len = 0;
    bool best_rev = false;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<char> in_prefix(n, 0);
        std::int64_t bnd = 0;
        for (int i = 0; i < n / 2; ++i) {
            const int v = pass == 0 ? order[i] : order[n - 1 - i];
            std::int64_t inside = 0;
            for (int u : g.adj[v])
                if (in_prefix[u]) ++inside;
            in_prefix[v] = 1;
            bnd += g.degree(v) - 2 * inside;
            const std::int64_t sz = i + 1;
            if (best_num < 0 || bnd * best_den < best_num * sz) {
                best_num = bnd;
                best_den = sz;
                best_len = i + 1;
                best_rev = pass == 1;
            }
        }
    }

    SweepCutResult r;
    r.value = static_cast<double>(best_num) / static_cast<double>(best_den);
    r.converged = converged;
    for (int i = 0; i < best_len; ++i)
        r.witness.push_back(best_rev ? order[n - 1 - i] : order[i]);
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

void for_each_connected_set(
    const Graph& g,
    const std::function<void(const std::vector<int>&, std::int64_t, std::int64_t)>& f) {
    const int n = g.n;
    std::vector<char> in_cur(n, 0), banned(n, 0);
    std::vector<int> members;
    std::int64_t e_in = 0, vol = 0;

    // Binary branching on one frontier vertex at a time; a set is emitted when
    // its frontier is exhausted, so each connected set appears exactly once.
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& frontier) {
        if (frontier.empty()) {
            f(members, e_in, vol);
            return;
        }
        const int u = frontier.back();
        frontier.pop_back();

        banned[u] = 1;  // branch 1: u excluded from this subtree
        rec(frontier);
        banned[u] = 0;

        // branch 2: u included
        std::int64_t gained = 0;
        for (int w : g.adj[u])
            if (in_cur[w]) ++gained;
        in_cur[u] = 1;
        members.push_back(u);
        e_in += gained;
        vol += g.degree(u);
        std::vector<int> next = frontier;
        const int root = members.front();
        for (int w : g.adj[u]) {
            if (w > root && !in_cur[w] && !banned[w]) {
                bool already = false;
                for (int q : next)
                    if (q == w) {
                        already = true;
                        break;
                    }
                if (!already) next.push_back(w);
            }
        }
        rec(next);
        e_in -= gained;
        vol -= g.degree(u);
        members.pop_back();
        in_cur[u] = 0;

        frontier.push_back(u);
    };

    for (int r = 0; r < n; ++r) {
        in_cur[r] = 1;
        members.push_back(r);
        vol = g.degree(r);
        e_in = 0;
        std::vector<int> frontier;
        for (int w : g.adj[r])
            if (w > r) frontier.push_back(w);
        rec(frontier);
        in_cur[r] = 0;
        members.pop_back();
    }
}

}  // namespace gstar
