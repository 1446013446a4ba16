#include "lix/costmodel.hpp"

#include <cmath>

#include "lix/error.hpp"

namespace lix {

namespace {

void require_horizon(double slice_interval, double session_length) {
    if (!std::isfinite(session_length) || !(session_length > 0.0)) {
        throw Error(ErrorCode::InvalidPlan, "session_length", "session length must be positive");
    }
    if (!std::isfinite(slice_interval) || !(slice_interval > 0.0) || slice_interval > session_length) {
        throw Error(ErrorCode::InvalidInterval, "slice_interval", "slice interval must lie in (0, session_length]");
    }
}

}  // namespace

ExecutionPlan::ExecutionPlan(double shares, double price, LiquidityIndex lix, double slice_interval,
                             double session_length, ScalingParams scaling)
    : shares_(shares),
      price_(price),
      lix_(lix),
      slice_interval_(slice_interval),
      session_length_(session_length),
      scaling_(scaling) {
    if (!std::isfinite(shares) || !(shares > 0.0)) {
        throw Error(ErrorCode::InvalidPlan, "shares", "share count must be positive");
    }
    if (!std::isfinite(price) || !(price > 0.0)) {
        throw Error(ErrorCode::InvalidPlan, "price", "price must be positive");
    }
    require_horizon(slice_interval, session_length);
}

double ExecutionPlan::horizon_factor() const {
    return std::pow(session_length_ / slice_interval_, 1.0 - scaling_.alpha());
}

double price_impact(const ExecutionPlan& plan) {
    return plan.shares() * plan.price() * std::pow(10.0, -plan.lix().value()) * plan.horizon_factor();
}

double cost_per_unit(double lix, double slice_interval, double session_length, const ScalingParams& scaling) {
    require_horizon(slice_interval, session_length);
    if (!std::isfinite(lix)) {
        throw Error(ErrorCode::NonFinite, "lix", "liquidity index is not finite");
    }
    return std::pow(10.0, -lix) * 0.5 * std::pow(session_length / slice_interval, 1.0 - scaling.alpha());
}

double cost_per_unit(const ExecutionPlan& plan) {
    return std::pow(10.0, -plan.lix().value()) * 0.5 * plan.horizon_factor();
}

double cost_sliced(const ExecutionPlan& plan) { return 0.5 * price_impact(plan); }

double cost_single_shot(const ExecutionPlan& plan) { return 0.5 * plan.shares() * price_impact(plan); }

}  // namespace lix
