#include "dqd/rtn.hpp"

#include <cmath>
#include <random>

#include "dqd/errors.hpp"

namespace dqd {

namespace {

// splitmix64: per-trajectory substream seeds from (seed, index).
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RtnEstimate rtn_monte_carlo_kernel(double tau, std::span<const double> t_grid,
                                   std::size_t n_traj, std::uint64_t seed) {
    if (n_traj == 0)
        throw InvalidSampleCount("trajectory count must be >= 1");
    if (!(tau > 0) || !std::isfinite(tau))
        throw InvalidParameter("memory time tau must be finite and > 0");
    if (t_grid.empty())
        throw InvalidParameter("time grid must be non-empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0) || !std::isfinite(t_grid[i]))
            throw InvalidParameter("grid times must be finite and >= 0");
        if (i > 0 && t_grid[i] < t_grid[i - 1])
            throw InvalidParameter("grid times must be non-decreasing");
    }

    const std::size_t n_pts = t_grid.size();
    const double rate = 1.0 / (2.0 * tau); // Poisson switching rate
    std::vector<double> sum(n_pts, 0.0), sum_sq(n_pts, 0.0);

    for (std::size_t k = 0; k < n_traj; ++k) {
        std::mt19937_64 rng(mix(seed + k));
        std::exponential_distribution<double> gap(rate);
        double sign = (rng() & 1u) ? 1.0 : -1.0;
        double phase = 0.0;    // signed time integral up to the last flip
        double prev = 0.0;     // time of the last flip
        double next_flip = gap(rng);
        for (std::size_t i = 0; i < n_pts; ++i) {
            const double t = t_grid[i];
            while (next_flip < t) {
                phase += sign * (next_flip - prev);
                prev = next_flip;
                sign = -sign;
                next_flip += gap(rng);
            }
            const double c = std::cos(2.0 * (phase + sign * (t - prev)));
            sum[i] += c;
            sum_sq[i] += c * c;
        }
    }

    RtnEstimate out;
    out.t.assign(t_grid.begin(), t_grid.end());
    out.mean.resize(n_pts);
    out.std_err.resize(n_pts);
    out.n_traj = n_traj;
    out.seed = seed;
    const double n = static_cast<double>(n_traj);
    for (std::size_t i = 0; i < n_pts; ++i) {
        out.mean[i] = sum[i] / n;
        double var = 0.0;
        if (n_traj > 1) {
            var = (sum_sq[i] - n * out.mean[i] * out.mean[i]) / (n - 1.0);
            var = std::max(var, 0.0);
        }
        out.std_err[i] = std::sqrt(var / n);
    }
    return out;
}

} // namespace dqd
