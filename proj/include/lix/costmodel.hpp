#pragma once

#include "lix/measures.hpp"

namespace lix {

/// Inputs to the execution-cost estimates.
///
/// `slice_interval` is the time granted to each trade. For price_impact and
/// cost_single_shot it is the horizon over which all `shares` are bought; for
/// cost_sliced it is the time per one-share slice. Prices are arrival prices.
class ExecutionPlan {
public:
    /// Throws InvalidPlan for non-positive shares, price or session length and
    /// InvalidInterval unless 0 < slice_interval <= session_length.
    ExecutionPlan(double shares, double price, LiquidityIndex lix, double slice_interval, double session_length,
                  ScalingParams scaling = {});

    double shares() const noexcept { return shares_; }
    double price() const noexcept { return price_; }
    const LiquidityIndex& lix() const noexcept { return lix_; }
    double slice_interval() const noexcept { return slice_interval_; }
    double session_length() const noexcept { return session_length_; }
    double alpha() const noexcept { return scaling_.alpha(); }

    /// (T / t)^(1 - alpha)
    double horizon_factor() const;

private:
    double shares_;
    double price_;
    LiquidityIndex lix_;
    double slice_interval_;
    double session_length_;
    ScalingParams scaling_;
};

/// Price range generated by buying n shares in time t:
/// n P / 10^LIX * (T / t)^(1 - alpha).
double price_impact(const ExecutionPlan& plan);

/// Worst-case cost of buying all n shares at once: n * price_impact / 2.
double cost_single_shot(const ExecutionPlan& plan);

/// Cost of n one-share slices with full recovery in between.
double cost_sliced(const ExecutionPlan& plan);

/// Sliced cost per currency unit invested; depends only on LIX and the horizon.
double cost_per_unit(const ExecutionPlan& plan);

/// 10^(-lix) * (T / t)^(1 - alpha) / 2, the per-unit cost without a plan.
double cost_per_unit(double lix, double slice_interval, double session_length, const ScalingParams& scaling = {});

}  // namespace lix
