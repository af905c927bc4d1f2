#include "gstar/rng.hpp"

namespace gstar {

namespace {

double pow_int(double base, std::uint64_t e) {
    double r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::uint64_t binomial_small_mean(Rng& rng, std::uint64_t trials, double p) {
    const double q = 1.0 - p;
    double pmf = pow_int(q, trials);
    double cdf = pmf;
    const double u = rng.next_double();
    std::uint64_t k = 0;
    while (u > cdf && k < trials) {
        ++k;
        pmf *= static_cast<double>(trials - k + 1) / static_cast<double>(k) * (p / q);
        if (pmf <= 0.0) break;  // numeric tail exhausted
        cdf += pmf;
    }
    return k;
}

}  // namespace

std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p) {
    if (trials == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    // Keep each leaf's mean <= 32 so (1-p)^trials stays well above underflow.
    if (static_cast<double>(trials) * p <= 32.0) return binomial_small_mean(rng, trials, p);
    const std::uint64_t half = trials / 2;
    std::uint64_t left = sample_binomial(rng, half, p);
    return left + sample_binomial(rng, trials - half, p);
}

}  // namespace gstar
