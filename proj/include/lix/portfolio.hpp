#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lix/measures.hpp"

namespace lix {

struct BasketPosition {
    std::string instrument_id;
    double beta = 0.0;  ///< money weight m_i / M
    LiquidityIndex lix{0.0, IndexKind::Daily};
};

enum class WeightMode {
    Strict,     ///< reject unless |sum(beta) - 1| <= kWeightTolerance
    Normalize,  ///< divide every beta by sum(beta)
};

/// Non-empty set of positive money weights summing to one, with an optional
/// liquidity leg for the ETF traded as its own security.
class BasketSpec {
public:
    static constexpr double kWeightTolerance = 1e-9;

    /// Throws EmptyBasket, NonPositiveWeight, or UnnormalizedWeights (Strict mode).
    BasketSpec(std::vector<BasketPosition> positions, std::optional<LiquidityIndex> etf_lix = std::nullopt,
               WeightMode mode = WeightMode::Strict);

    std::span<const BasketPosition> positions() const noexcept { return positions_; }
    const std::optional<LiquidityIndex>& etf_lix() const noexcept { return etf_lix_; }
    /// Sum of the weights as supplied, before normalization.
    double raw_weight_sum() const noexcept { return raw_weight_sum_; }

    Eigen::ArrayXd betas() const;
    Eigen::ArrayXd lix_values() const;

private:
    std::vector<BasketPosition> positions_;
    std::optional<LiquidityIndex> etf_lix_;
    double raw_weight_sum_ = 0.0;
};

/// log10(sum_i w_i 10^{x_i}) evaluated around the largest exponent so that no
/// intermediate power overflows. Weights must be positive.
template <typename DerivedW, typename DerivedX>
double log10_weighted_sum_pow10(const Eigen::ArrayBase<DerivedW>& weights, const Eigen::ArrayBase<DerivedX>& exponents) {
    const double top = exponents.maxCoeff();
    const double scaled = (weights * ((exponents - top) * std::log(10.0)).exp()).sum();
    return top + std::log10(scaled);
}

/// -log10(sum_i beta_i / 10^{LIX_i}); the LIX of a single instrument whose
/// per-currency-unit trading cost matches the basket's. Ignores the ETF leg.
LiquidityIndex basket_lix(const BasketSpec& spec);

/// log10(10^{basket_lix} + 10^{LIX_ETF}). Throws MissingEtfLeg.
LiquidityIndex basket_with_etf_lix(const BasketSpec& spec);

/// log10(sum_i 10^{LIX_i}): one instrument traded on several venues.
LiquidityIndex venue_combine(std::span<const LiquidityIndex> lix_values);

}  // namespace lix
