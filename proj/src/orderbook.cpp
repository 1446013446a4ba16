#include "lix/orderbook.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lix/error.hpp"

namespace lix {

namespace {

std::string level_name(const char* side, std::size_t index) {
    return std::string(side) + "[" + std::to_string(index + 1) + "]";
}

void check_levels(const std::vector<BookLevel>& levels, const char* side, bool descending) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& level = levels[i];
        if (!std::isfinite(level.price) || !(level.price > 0.0)) {
            throw Error(ErrorCode::InvalidLevel, level_name(side, i), "price must be positive and finite");
        }
        if (!std::isfinite(level.volume) || !(level.volume > 0.0)) {
            throw Error(ErrorCode::InvalidLevel, level_name(side, i), "volume must be positive and finite");
        }
        if (i > 0) {
            const double prev = levels[i - 1].price;
            const bool ordered = descending ? level.price < prev : level.price > prev;
            if (!ordered) {
                throw Error(ErrorCode::InvariantViolation, level_name(side, i),
                            descending ? "bid prices must be strictly descending"
                                       : "ask prices must be strictly ascending");
            }
        }
    }
}

void require_two_sided(const OrderBookSnapshot& book) {
    if (book.bids().empty()) {
        throw Error(ErrorCode::EmptySide, "bids", "no bid levels");
    }
    if (book.asks().empty()) {
        throw Error(ErrorCode::EmptySide, "asks", "no ask levels");
    }
}

struct SideSummary {
    double volume;
    double vwap_spread;
};

SideSummary summarize(const OrderBookSnapshot& book) {
    require_two_sided(book);
    const double spread = side_vwap(book.asks()) - side_vwap(book.bids());
    if (!(spread > 0.0)) {
        throw Error(ErrorCode::CrossedBook, "t=" + std::to_string(book.timestamp()),
                    "volume-weighted ask does not exceed volume-weighted bid");
    }
    return {book.bid_volume() + book.ask_volume(), spread};
}

void require_adv(const AdvContext& ctx) {
    if (!std::isfinite(ctx.adv) || !(ctx.adv > 0.0)) {
        throw Error(ErrorCode::InvalidAdv, "adv", "average daily volume must be positive");
    }
}

}  // namespace

OrderBookSnapshot::OrderBookSnapshot(double timestamp, std::vector<BookLevel> bids, std::vector<BookLevel> asks)
    : timestamp_(timestamp), bids_(std::move(bids)), asks_(std::move(asks)) {
    if (!std::isfinite(timestamp_)) {
        throw Error(ErrorCode::InvalidParams, "timestamp", "timestamp is not finite");
    }
    check_levels(bids_, "bid", true);
    check_levels(asks_, "ask", false);
    if (!bids_.empty() && !asks_.empty() && !(asks_.front().price > bids_.front().price)) {
        throw Error(ErrorCode::CrossedBook, "t=" + std::to_string(timestamp_), "best ask must exceed best bid");
    }
}

double OrderBookSnapshot::best_bid() const {
    if (bids_.empty()) {
        throw Error(ErrorCode::EmptySide, "bids", "no bid levels");
    }
    return bids_.front().price;
}

double OrderBookSnapshot::best_ask() const {
    if (asks_.empty()) {
        throw Error(ErrorCode::EmptySide, "asks", "no ask levels");
    }
    return asks_.front().price;
}

double OrderBookSnapshot::mid() const { return 0.5 * (best_ask() + best_bid()); }

double OrderBookSnapshot::bid_volume() const noexcept { return ladder_view(bids_).row(1).sum(); }

double OrderBookSnapshot::ask_volume() const noexcept { return ladder_view(asks_).row(1).sum(); }

double side_vwap(std::span<const BookLevel> levels) {
    if (levels.empty()) {
        throw Error(ErrorCode::EmptySide, "levels", "no levels on this side");
    }
    const auto ladder = ladder_view(levels);
    const double vwap = ladder.row(0).dot(ladder.row(1)) / ladder.row(1).sum();
    return std::clamp(vwap, ladder.row(0).minCoeff(), ladder.row(0).maxCoeff());
}

LiquidityIndex lixi_tau(const OrderBookSnapshot& book) {
    const auto side = summarize(book);
    return {std::log10(side.volume * book.mid() / side.vwap_spread), IndexKind::Instantaneous};
}

LiquidityIndex lixi(const OrderBookSnapshot& book, const AdvContext& ctx, const ScalingParams& params) {
    require_adv(ctx);
    const auto side = summarize(book);
    const double unscaled = std::log10(side.volume * book.mid() / side.vwap_spread);
    return {unscaled + (1.0 - params.alpha()) * std::log10(ctx.adv / side.volume), IndexKind::Instantaneous};
}

double relative_spread(const OrderBookSnapshot& book) {
    const auto side = summarize(book);
    return side.vwap_spread / book.mid();
}

LixiDecomposition lixi_decomposed(const OrderBookSnapshot& book, const AdvContext& ctx) {
    require_adv(ctx);
    const auto side = summarize(book);
    LixiDecomposition out;
    out.spread_term = -std::log10(side.vwap_spread / book.mid());
    out.depth_term = 0.5 * std::log10(side.volume);
    out.adv_term = 0.5 * std::log10(ctx.adv);
    out.total = out.spread_term + out.depth_term + out.adv_term;
    out.bid_levels = book.bids().size();
    out.ask_levels = book.asks().size();
    return out;
}

}  // namespace lix
