#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "lix/measures.hpp"

namespace lix {

/// One displayed price level. Layout is two packed doubles so a ladder can be
/// viewed as a 2 x N Eigen matrix (row 0 prices, row 1 volumes).
struct BookLevel {
    double price = 0.0;
    double volume = 0.0;

    friend bool operator==(const BookLevel&, const BookLevel&) = default;
};

static_assert(sizeof(BookLevel) == 2 * sizeof(double));

using LadderView = Eigen::Map<const Eigen::Matrix<double, 2, Eigen::Dynamic>>;

inline LadderView ladder_view(std::span<const BookLevel> levels) {
    return LadderView(reinterpret_cast<const double*>(levels.data()), 2,
                      static_cast<Eigen::Index>(levels.size()));
}

/// Immutable snapshot of a limit order book.
///
/// Construction checks every level (positive price and volume), strict price
/// ordering on each side (bids descending, asks ascending) and, when both sides
/// are present, that best ask > best bid. One side may be empty; LIXI
/// operations then fail with EmptySide.
class OrderBookSnapshot {
public:
    OrderBookSnapshot(double timestamp, std::vector<BookLevel> bids, std::vector<BookLevel> asks);

    double timestamp() const noexcept { return timestamp_; }
    std::span<const BookLevel> bids() const noexcept { return bids_; }
    std::span<const BookLevel> asks() const noexcept { return asks_; }

    double best_bid() const;
    double best_ask() const;
    /// (best ask + best bid) / 2.
    double mid() const;
    double bid_volume() const noexcept;
    double ask_volume() const noexcept;

    friend bool operator==(const OrderBookSnapshot&, const OrderBookSnapshot&) = default;

private:
    double timestamp_;
    std::vector<BookLevel> bids_;
    std::vector<BookLevel> asks_;
};

/// Volume-weighted average daily volume used to convert book depth into an
/// equivalent trading time.
struct AdvContext {
    double adv = 0.0;
    int window_days = 0;
    double session_length = 0.0;
};

/// sum(p_i v_i) / sum(v_i) over the given levels. Throws EmptySide.
double side_vwap(std::span<const BookLevel> levels);

/// Unscaled instantaneous liquidity
/// log10((V_bid + V_ask) * P_mid / (vwap_ask - vwap_bid)).
LiquidityIndex lixi_tau(const OrderBookSnapshot& book);

/// lixi_tau corrected to the daily horizon:
/// lixi_tau + (1 - alpha) * log10(adv / (V_bid + V_ask)).
LiquidityIndex lixi(const OrderBookSnapshot& book, const AdvContext& ctx, const ScalingParams& params = {});

/// (vwap_ask - vwap_bid) / P_mid.
double relative_spread(const OrderBookSnapshot& book);

/// Three-term split of LIXI at alpha = 1/2.
struct LixiDecomposition {
    double spread_term = 0.0;  ///< -log10(relative spread)
    double depth_term = 0.0;   ///< 0.5 * log10(V_bid + V_ask)
    double adv_term = 0.0;     ///< 0.5 * log10(adv)
    double total = 0.0;
    std::size_t bid_levels = 0;
    std::size_t ask_levels = 0;
};

LixiDecomposition lixi_decomposed(const OrderBookSnapshot& book, const AdvContext& ctx);

}  // namespace lix
