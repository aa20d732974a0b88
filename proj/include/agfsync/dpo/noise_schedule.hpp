#pragma once

#include <span>
#include <vector>

namespace agfsync::dpo {

// Variance-preserving discrete schedule: alpha[t]^2 + sigma[t]^2 = 1 for all
// t, alpha decreasing, sigma increasing.
struct NoiseSchedule {
    int total_timesteps = 0;  // T
    std::vector<double> alpha;
    std::vector<double> sigma;

    void validate() const;  // array sizes, VP identity within 1e-9, monotonicity
};

inline constexpr double kVpTolerance = 1e-9;

// Standard discrete VP construction from a linear beta ramp:
// alpha_bar_t = prod_{s<=t} (1 - beta_s), alpha[t] = sqrt(alpha_bar_t),
// sigma[t] = sqrt(1 - alpha_bar_t).
NoiseSchedule make_linear_schedule(int total_timesteps = 1000, double beta_start = 1e-4,
                                   double beta_end = 0.02);

// x_t = alpha[t] * x0 + sigma[t] * eps.
std::vector<double> forward_diffuse(std::span<const double> x0, int t,
                                    std::span<const double> eps, const NoiseSchedule& schedule);

}  // namespace agfsync::dpo
