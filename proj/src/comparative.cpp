#include "lix/comparative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lix/error.hpp"

namespace lix {

MultiDayWindow::MultiDayWindow(std::vector<DailyBar> bars, std::optional<double> shares_outstanding)
    : bars_(std::move(bars)), shares_outstanding_(shares_outstanding) {
    if (bars_.empty()) {
        throw Error(ErrorCode::InsufficientData, "bars", "window has no bars");
    }
    if (shares_outstanding_ && !(std::isfinite(*shares_outstanding_) && *shares_outstanding_ > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "shares_outstanding", "must be positive");
    }
    for (std::size_t i = 0; i < bars_.size(); ++i) {
        validate(bars_[i]);
        if (i == 0) {
            continue;
        }
        if (bars_[i].instrument_id != bars_[0].instrument_id) {
            throw Error(ErrorCode::InvalidWindow, to_string(bars_[i].date), "bars from more than one instrument");
        }
        if (!(bars_[i - 1].date < bars_[i].date)) {
            throw Error(ErrorCode::InvalidWindow, to_string(bars_[i].date), "dates must be strictly increasing");
        }
    }
}

double hui_heubel(const MultiDayWindow& window) {
    if (!window.shares_outstanding()) {
        throw Error(ErrorCode::InvalidParams, "shares_outstanding", "Hui-Heubel needs shares outstanding");
    }
    const auto all = window.bars();
    if (all.size() < kHuiHeubelDays) {
        throw Error(ErrorCode::InsufficientData, "bars",
                    "need " + std::to_string(kHuiHeubelDays) + " bars, have " + std::to_string(all.size()));
    }
    const auto days = all.last(kHuiHeubelDays);

    double high = days.front().high;
    double low = days.front().low;
    double dollar_volume = 0.0;
    double close_sum = 0.0;
    for (const auto& bar : days) {
        high = std::max(high, bar.high);
        low = std::min(low, bar.low);
        dollar_volume += bar.close * bar.volume;
        close_sum += bar.close;
    }
    if (!(low > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "low", "lowest price must be positive");
    }
    if (high == low) {
        throw Error(ErrorCode::ZeroRange, "high", "no price movement over the window");
    }
    if (!(dollar_volume > 0.0)) {
        throw Error(ErrorCode::ZeroDollarVolume, "volume", "no dollar volume over the window");
    }
    const double mean_close = close_sum / static_cast<double>(days.size());
    const double turnover = dollar_volume / (*window.shares_outstanding() * mean_close);
    return ((high - low) / low) / turnover;
}

std::vector<IlliqTerm> amihud_terms(const MultiDayWindow& window) {
    const auto bars = window.bars();
    if (bars.size() < 2) {
        throw Error(ErrorCode::InsufficientData, "bars", "need at least two bars for a return");
    }
    std::vector<IlliqTerm> terms;
    terms.reserve(bars.size() - 1);
    for (std::size_t i = 1; i < bars.size(); ++i) {
        const auto& prev = bars[i - 1];
        const auto& bar = bars[i];
        if (!(prev.close > 0.0)) {
            throw Error(ErrorCode::NonPositivePrice, to_string(prev.date), "close must be positive");
        }
        const double dollar_volume = bar.close * bar.volume;
        if (!(dollar_volume > 0.0)) {
            throw Error(ErrorCode::ZeroDollarVolume, to_string(bar.date), "no dollar volume on this day");
        }
        const double ret = bar.close / prev.close - 1.0;
        terms.push_back({bar.date, std::abs(ret) / dollar_volume});
    }
    return terms;
}

double amihud_illiq(const MultiDayWindow& window) {
    const auto terms = amihud_terms(window);
    double sum = 0.0;
    for (const auto& term : terms) {
        sum += term.value;
    }
    return sum / static_cast<double>(terms.size());
}

}  // namespace lix
