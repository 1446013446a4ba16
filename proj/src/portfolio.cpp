#include "lix/portfolio.hpp"

#include <cmath>

#include "lix/error.hpp"

namespace lix {

BasketSpec::BasketSpec(std::vector<BasketPosition> positions, std::optional<LiquidityIndex> etf_lix, WeightMode mode)
    : positions_(std::move(positions)), etf_lix_(etf_lix) {
    if (positions_.empty()) {
        throw Error(ErrorCode::EmptyBasket, "positions", "basket has no positions");
    }
    double sum = 0.0;
    for (const auto& position : positions_) {
        if (!std::isfinite(position.beta) || !(position.beta > 0.0)) {
            throw Error(ErrorCode::NonPositiveWeight, position.instrument_id, "weights must be positive");
        }
        sum += position.beta;
    }
    raw_weight_sum_ = sum;
    if (mode == WeightMode::Strict && std::abs(sum - 1.0) > kWeightTolerance) {
        throw Error(ErrorCode::UnnormalizedWeights, "beta",
                    "weights sum to " + std::to_string(sum) + ", expected 1");
    }
    for (auto& position : positions_) {
        position.beta /= sum;
    }
}

Eigen::ArrayXd BasketSpec::betas() const {
    Eigen::ArrayXd out(static_cast<Eigen::Index>(positions_.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out[i] = positions_[static_cast<std::size_t>(i)].beta;
    }
    return out;
}

Eigen::ArrayXd BasketSpec::lix_values() const {
    Eigen::ArrayXd out(static_cast<Eigen::Index>(positions_.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out[i] = positions_[static_cast<std::size_t>(i)].lix.value();
    }
    return out;
}

LiquidityIndex basket_lix(const BasketSpec& spec) {
    return {-log10_weighted_sum_pow10(spec.betas(), -spec.lix_values()), IndexKind::Basket};
}

LiquidityIndex basket_with_etf_lix(const BasketSpec& spec) {
    if (!spec.etf_lix()) {
        throw Error(ErrorCode::MissingEtfLeg, "etf_lix", "basket has no ETF liquidity leg");
    }
    const Eigen::Array2d legs(basket_lix(spec).value(), spec.etf_lix()->value());
    return {log10_weighted_sum_pow10(Eigen::Array2d::Ones(), legs), IndexKind::BasketWithEtf};
}

LiquidityIndex venue_combine(std::span<const LiquidityIndex> lix_values) {
    if (lix_values.empty()) {
        throw Error(ErrorCode::EmptyList, "lix_values", "no venues to combine");
    }
    Eigen::ArrayXd values(static_cast<Eigen::Index>(lix_values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        values[i] = lix_values[static_cast<std::size_t>(i)].value();
    }
    return {log10_weighted_sum_pow10(Eigen::ArrayXd::Ones(values.size()), values), IndexKind::VenueCombined};
}

}  // namespace lix
