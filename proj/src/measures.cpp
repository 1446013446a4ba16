#include "lix/measures.hpp"

#include <cmath>
#include <cstdio>

#include "lix/error.hpp"

namespace lix {

namespace {

void require_finite(double value, const char* field, ErrorCode code) {
    if (!std::isfinite(value)) {
        throw Error(code, field, "value is not finite");
    }
}

// Shared by the daily and intraday forms; both reduce to consideration / range.
double consideration_over_range(double volume, double price, double high, double low) {
    if (!(price > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "price", "price must be positive");
    }
    if (!(volume > 0.0)) {
        throw Error(ErrorCode::ZeroVolume, "volume", "volume must be positive");
    }
    if (high < low) {
        throw Error(ErrorCode::InvalidBar, "high", "high below low");
    }
    if (high == low) {
        throw Error(ErrorCode::ZeroRange, "high", "high equals low");
    }
    return std::log10(volume * price / (high - low));
}

}  // namespace

std::string to_string(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

void validate(const DailyBar& bar) {
    for (auto [value, field] : {std::pair{bar.open, "open"}, {bar.high, "high"}, {bar.low, "low"},
                                {bar.close, "close"}, {bar.volume, "volume"}}) {
        require_finite(value, field, ErrorCode::InvalidBar);
    }
    if (bar.low > bar.high) {
        throw Error(ErrorCode::InvalidBar, "low", "low above high");
    }
    if (bar.open < bar.low || bar.open > bar.high) {
        throw Error(ErrorCode::InvalidBar, "open", "open outside [low, high]");
    }
    if (bar.close < bar.low || bar.close > bar.high) {
        throw Error(ErrorCode::InvalidBar, "close", "close outside [low, high]");
    }
    if (bar.volume < 0.0) {
        throw Error(ErrorCode::InvalidBar, "volume", "negative volume");
    }
}

void validate(const IntradayWindow& window) {
    for (auto [value, field] :
         {std::pair{window.elapsed, "elapsed"}, {window.session_length, "session_length"},
          {window.cum_volume, "cum_volume"}, {window.high, "high"}, {window.low, "low"},
          {window.last_price, "last_price"}}) {
        require_finite(value, field, ErrorCode::InvalidBar);
    }
    if (!(window.elapsed > 0.0) || window.elapsed > window.session_length) {
        throw Error(ErrorCode::InvalidInterval, "elapsed", "elapsed must lie in (0, session_length]");
    }
    if (window.last_price < window.low || window.last_price > window.high) {
        throw Error(ErrorCode::InvalidBar, "last_price", "last price outside [low, high]");
    }
    if (window.cum_volume < 0.0) {
        throw Error(ErrorCode::InvalidBar, "cum_volume", "negative volume");
    }
}

ScalingParams::ScalingParams(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha", "alpha must lie in (0, 1]");
    }
}

std::string_view to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::Daily: return "daily";
        case IndexKind::IntradayRaw: return "intraday_raw";
        case IndexKind::IntradayScaled: return "intraday_scaled";
        case IndexKind::Instantaneous: return "instantaneous";
        case IndexKind::Basket: return "basket";
        case IndexKind::BasketWithEtf: return "basket_with_etf";
        case IndexKind::VenueCombined: return "venue_combined";
    }
    return "unknown";
}

LiquidityIndex::LiquidityIndex(double value, IndexKind kind) : value_(value), kind_(kind) {
    require_finite(value, "lix", ErrorCode::NonFinite);
}

LiquidityIndex lix_daily(const DailyBar& bar) {
    validate(bar);
    if (!(bar.close > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "close", "close must be positive");
    }
    if (!(bar.volume > 0.0)) {
        throw Error(ErrorCode::ZeroVolume, "volume", "no shares traded");
    }
    if (bar.high == bar.low) {
        throw Error(ErrorCode::ZeroRange, "high", "high equals low");
    }
    return {consideration_over_range(bar.volume, bar.close, bar.high, bar.low), IndexKind::Daily};
}

LiquidityIndex lix_intraday_raw(const IntradayWindow& window) {
    validate(window);
    if (!(window.last_price > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "last_price", "last price must be positive");
    }
    if (!(window.cum_volume > 0.0)) {
        throw Error(ErrorCode::ZeroVolume, "cum_volume", "no shares traded");
    }
    if (window.high == window.low) {
        throw Error(ErrorCode::ZeroRange, "high", "high equals low");
    }
    return {consideration_over_range(window.cum_volume, window.last_price, window.high, window.low),
            IndexKind::IntradayRaw};
}

LiquidityIndex time_scale_to_daily(const LiquidityIndex& lix, double elapsed, double session_length,
                                   const ScalingParams& params) {
    if (!(elapsed > 0.0) || !(session_length > 0.0) || elapsed > session_length) {
        throw Error(ErrorCode::InvalidInterval, "elapsed", "elapsed must lie in (0, session_length]");
    }
    const double correction = (1.0 - params.alpha()) * std::log10(session_length / elapsed);
    return {lix.value() + correction, IndexKind::IntradayScaled};
}

}  // namespace lix
