// rtn.hpp — Monte Carlo estimate of the random-telegraph dephasing kernel,
// the independent oracle for memory_kernel_F.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dqd {

struct RtnEstimate {
    std::vector<double> t;
    std::vector<double> mean;    // ensemble average of cos(2 * integral of the signal)
    std::vector<double> std_err; // standard error of the mean per grid point
    std::size_t n_traj = 0;
    std::uint64_t seed = 0;
};

// Simulates dichotomic +/-1 telegraph trajectories with Poisson switching at
// rate 1/(2 tau), accumulates the phase 2 * integral, and averages its cosine.
// Deterministic for fixed (seed, n_traj, grid): trajectory k draws from a
// substream derived from the seed and k alone, and sums run in index order.
// Grid must be non-decreasing with t >= 0. Throws InvalidSampleCount when
// n_traj = 0, InvalidParameter otherwise.
RtnEstimate rtn_monte_carlo_kernel(double tau, std::span<const double> t_grid,
                                   std::size_t n_traj, std::uint64_t seed);

} // namespace dqd
