#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace lix {

using Date = std::chrono::year_month_day;

/// ISO-8601 YYYY-MM-DD.
std::string to_string(const Date& date);

/// One trading day of OHLC prices and share volume for one instrument.
struct DailyBar {
    std::string instrument_id;
    Date date{};
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;

    friend bool operator==(const DailyBar&, const DailyBar&) = default;
};

/// Throws Error{InvalidBar} naming the first field that breaks
/// low <= open, close <= high or volume >= 0.
void validate(const DailyBar& bar);

/// Cumulative trading state over the first `elapsed` seconds of a session.
struct IntradayWindow {
    double elapsed = 0.0;
    double session_length = 0.0;
    double cum_volume = 0.0;
    double high = 0.0;
    double low = 0.0;
    double last_price = 0.0;

    friend bool operator==(const IntradayWindow&, const IntradayWindow&) = default;
};

void validate(const IntradayWindow& window);

/// Exponent of the price-range time scaling, range(t) ~ t^alpha.
///
/// Accepts alpha in (0, 1]; 0.5 is the random-walk value, alpha = 1 turns the
/// time correction off.
class ScalingParams {
public:
    static constexpr double kRandomWalkAlpha = 0.5;

    ScalingParams() = default;
    explicit ScalingParams(double alpha);

    double alpha() const noexcept { return alpha_; }

private:
    double alpha_ = kRandomWalkAlpha;
};

enum class IndexKind {
    Daily,
    IntradayRaw,
    IntradayScaled,
    Instantaneous,
    Basket,
    BasketWithEtf,
    VenueCombined,
};

std::string_view to_string(IndexKind kind);

/// Base-10 log liquidity value tagged with how it was obtained.
class LiquidityIndex {
public:
    /// Throws Error{NonFinite} if `value` is NaN or infinite.
    LiquidityIndex(double value, IndexKind kind);

    double value() const noexcept { return value_; }
    IndexKind kind() const noexcept { return kind_; }

    friend bool operator==(const LiquidityIndex&, const LiquidityIndex&) = default;

private:
    double value_;
    IndexKind kind_;
};

/// log10(volume * close / (high - low)).
LiquidityIndex lix_daily(const DailyBar& bar);

/// Unscaled intraday index log10(V_t * P_t / (high_t - low_t)), kind IntradayRaw.
/// Not comparable across horizons until passed through time_scale_to_daily.
LiquidityIndex lix_intraday_raw(const IntradayWindow& window);

/// Maps an index measured over the first `elapsed` seconds onto the full
/// session: lix + (1 - alpha) * log10(session / elapsed).
LiquidityIndex time_scale_to_daily(const LiquidityIndex& lix, double elapsed, double session_length,
                                   const ScalingParams& params = {});

}  // namespace lix
