#include "gstar/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "gstar/rng.hpp"

namespace gstar {

double PerturbationParams::effective_eps(int n) const {
    if (eps_exponent) {
        const double a = *eps_exponent;
        if (!(a > 0.0 && a < 1.0)) throw domain_error("eps exponent must lie in (0,1)");
        return std::pow(static_cast<double>(n), -a);
    }
    return eps;
}

namespace {

// Colex pair index: pairs (u,v) with u < v, index = C(v,2) + u.
std::uint64_t pairs_below(std::uint64_t v) { return v * (v - 1) / 2; }

Edge decode_pair(std::uint64_t idx) {
    auto v = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (v >= 1 && pairs_below(v) > idx) --v;
    while (pairs_below(v + 1) <= idx) ++v;
    const std::uint64_t u = idx - pairs_below(v);
    return {static_cast<int>(u), static_cast<int>(v)};
}

}  // namespace

PerturbedGraph perturb(const Graph& g, const PerturbationParams& params) {
    if (g.n < 1) throw domain_error("perturb needs a nonempty graph");
    const double eps = params.effective_eps(g.n);
    if (eps < 0.0) throw domain_error("eps must be nonnegative");
    const double p = eps / static_cast<double>(g.n);
    if (p >= 1.0) throw domain_error("eps/n must be below 1");

    const std::uint64_t npairs =
        pairs_below(static_cast<std::uint64_t>(g.n) + 1) - static_cast<std::uint64_t>(g.n);
    // = C(n,2)

    Rng rng(derive_seed(params.seed, {static_cast<std::uint64_t>(g.n), 0x70657274ULL}));
    const std::uint64_t count = sample_binomial(rng, npairs, p);

    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2 + 1);
    while (chosen.size() < count) chosen.insert(rng.next_below(npairs));

    std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
    std::sort(indices.begin(), indices.end());

    PerturbedGraph pg;
    pg.base = g;
    pg.random_edges.reserve(indices.size());
    for (std::uint64_t idx : indices) pg.random_edges.push_back(decode_pair(idx));

    std::vector<Edge> merged_edges = g.edges();
    for (const Edge& e : pg.random_edges)
        if (!g.has_edge(e.first, e.second)) merged_edges.push_back(e);
    pg.merged = make_graph(g.n, merged_edges);
    return pg;
}

}  // namespace gstar
