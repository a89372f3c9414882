#pragma once

#include <cstdint>

namespace eraser {

// Schedule for the privacy penalty coefficient p: starts at p_init and rises
// by p_step every step_interval iterations, clamped at p_max.
struct RewardParams {
    double p_init = 20.0;
    double p_step = 5.0;
    std::uint64_t step_interval = 350;
    double p_max = 40.0;
};

// Discount factor exported for external policy trainers; unused internally.
inline constexpr double kPolicyDiscountFactor = 0.99;

// R = r_pub * exp(-p * r_pri). Rewards full public retention, and the
// exponential term crushes the reward as soon as any private triple
// survives. Throws InvalidRateError when a rate leaves [0,1] or p <= 0.
double reward(double r_pub, double r_pri, double p);

// min(p_init + p_step * floor(iteration / step_interval), p_max).
double p_schedule(std::uint64_t iteration, const RewardParams& params);

// Ablation variant: exp(-p * r_pri); equals reward(1, r_pri, p).
double privacy_only_reward(double r_pri, double p);

}  // namespace eraser
