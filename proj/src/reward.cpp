#include "eraser/reward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eraser/error.hpp"

namespace eraser {

namespace {

void check_rate(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidRateError(std::string(name) + " must lie in [0,1], got " +
                               std::to_string(value));
    }
}

void check_penalty(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw InvalidRateError("penalty coefficient must be a positive finite real");
    }
}

}  // namespace

double reward(double r_pub, double r_pri, double p) {
    check_rate(r_pub, "r_pub");
    check_rate(r_pri, "r_pri");
    check_penalty(p);
    return r_pub * std::exp(-p * r_pri);
}

double p_schedule(std::uint64_t iteration, const RewardParams& params) {
    double stepped = params.p_init +
                     params.p_step * static_cast<double>(iteration / params.step_interval);
    return std::min(stepped, params.p_max);
}

double privacy_only_reward(double r_pri, double p) {
    check_rate(r_pri, "r_pri");
    check_penalty(p);
    return std::exp(-p * r_pri);
}

}  // namespace eraser
