#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lix/measures.hpp"

namespace lix {

/// Consecutive daily bars of one instrument, dates strictly increasing.
class MultiDayWindow {
public:
    /// Throws InsufficientData when empty, InvalidWindow on mixed instruments or
    /// non-increasing dates, InvalidBar on a malformed bar, InvalidParams for a
    /// non-positive share count.
    explicit MultiDayWindow(std::vector<DailyBar> bars, std::optional<double> shares_outstanding = std::nullopt);

    std::span<const DailyBar> bars() const noexcept { return bars_; }
    const std::optional<double>& shares_outstanding() const noexcept { return shares_outstanding_; }

private:
    std::vector<DailyBar> bars_;
    std::optional<double> shares_outstanding_;
};

inline constexpr std::size_t kHuiHeubelDays = 5;

/// Hui-Heubel liquidity ratio over the trailing five bars:
/// ((max high - min low) / min low) / (dollar volume / (M * mean close)),
/// dollar volume approximated per day as close * volume.
double hui_heubel(const MultiDayWindow& window);

/// Per-day Amihud terms |r_i| / (close_i * volume_i) with simple returns,
/// one entry per bar after the first.
struct IlliqTerm {
    Date date;
    double value;
};

std::vector<IlliqTerm> amihud_terms(const MultiDayWindow& window);

/// Mean of amihud_terms; needs at least two bars.
double amihud_illiq(const MultiDayWindow& window);

}  // namespace lix
