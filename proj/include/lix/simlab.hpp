#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lix/measures.hpp"
#include "lix/orderbook.hpp"

namespace lix::sim {

// ---------------------------------------------------------------------------
// Reproducible random streams

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of sub-stream (a, b) of `seed`. Streams depend only on these three
/// values, never on thread count or evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept {
    return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

using Engine = std::mt19937_64;

Engine make_engine(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0);

/// Worker count: LIX_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

// ---------------------------------------------------------------------------
// Price path models

enum class PathKind {
    ArithmeticRandomWalk,  ///< additive +/- volatility steps with probability 1/2
    GaussianReturns,       ///< log-price increments N(0, volatility^2)
    StudentTReturns,       ///< log-price increments t(dof) rescaled to sd = volatility
    LinearDrift,           ///< deterministic +volatility per step (degenerate test model)
};

struct PathModel {
    PathKind kind = PathKind::ArithmeticRandomWalk;
    double dof = 0.0;
    int steps_per_day = 10000;
    double volatility_per_step = 0.01;
    std::uint64_t seed = 0;
    double initial_price = 100.0;
};

/// Throws InvalidParams: steps_per_day >= 10, volatility >= 0 and finite,
/// dof > 2 for StudentT, initial_price > 0.
void validate(const PathModel& model);

/// Prices at steps 0..steps_per_day (index 0 is the open).
std::vector<double> simulate_prices(const PathModel& model, Engine& engine);

/// Approximate E[(high - low) / open] over a full session.
double expected_relative_range(const PathModel& model);

// ---------------------------------------------------------------------------
// Range-scaling exponent

struct AlphaEstimate {
    double alpha_hat = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
    std::vector<double> time_grid;    ///< ascending fractions t/T
    std::vector<double> mean_range;   ///< E[high - low] at each grid fraction
};

inline std::vector<double> default_time_grid() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

/// Least-squares slope of log E[range(fT)] on log f over `n_paths` simulated
/// sessions. Path i draws from stream (model.seed, i). The standard error is
/// the delta-method Monte Carlo error of the slope.
///
/// Throws InvalidParams (n_paths < 1000 or invalid model) and DegenerateGrid
/// (fewer than five distinct fractions in (0, 1], or two fractions landing on
/// the same step).
AlphaEstimate estimate_alpha(const PathModel& model, std::size_t n_paths,
                             std::span<const double> time_grid = default_time_grid());

// ---------------------------------------------------------------------------
// Regression

struct RegressionReport {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
    std::size_t n_points = 0;
};

/// Ordinary least squares y = slope * x + intercept. Throws
/// DegenerateRegression for fewer than two points or constant x.
RegressionReport ols_fit(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y);

// ---------------------------------------------------------------------------
// Synthetic sessions

/// Order-book generator. Total displayed depth is drawn around
/// depth_fraction * daily volume; the VWAP relative spread around
/// spread_factor * E[relative range] * sqrt(depth / daily volume), i.e. the
/// range the market would print while trading the book's volume.
struct BookParams {
    int levels_per_side = 5;
    double depth_fraction = 0.01;
    double spread_factor = 1.0;
    double log10_noise = 0.1;
    double min_relative_spread = 1e-4;
    int snapshots = 100;
};

struct SessionLayout {
    std::string instrument_id = "SYN";
    Date date{std::chrono::year{2013}, std::chrono::month{1}, std::chrono::day{28}};
    double session_length = 23400.0;
    int windows = 100;
};

struct SyntheticSession {
    DailyBar bar;
    std::vector<OrderBookSnapshot> snapshots;
    std::vector<IntradayWindow> windows;
};

/// One simulated session: a price path from `model` (model.seed is ignored in
/// favour of `seed`), cumulative volume linear in time, `layout.windows`
/// evenly spaced intraday windows and `book.snapshots` evenly spaced books.
SyntheticSession synth_session(const PathModel& model, double daily_volume, const BookParams& book,
                               std::uint64_t seed, const SessionLayout& layout = {});

// ---------------------------------------------------------------------------
// LIXI vs LIX study

struct InstrumentParams {
    std::string id;
    PathModel model;
    double daily_volume = 0.0;
    double volume_log10_noise = 0.1;
    BookParams book;
};

/// `count` instruments whose target daily LIX is spread evenly over
/// [lix_low, lix_high], with randomized price level and volatility.
std::vector<InstrumentParams> default_universe(std::size_t count = 50, double lix_low = 5.0, double lix_high = 10.0,
                                               std::uint64_t seed = 7);

struct StudyOptions {
    int adv_window = 20;
    ScalingParams scaling{};
    double session_length = 23400.0;
    double price_scale = 1.0;
};

struct StudyPoint {
    std::string id;
    double mean_lix = 0.0;   ///< arithmetic mean of daily LIX over the valid days
    double mean_lixi = 0.0;  ///< arithmetic mean of LIXI over the last day's snapshots
    std::size_t valid_days = 0;
};

struct StudyResult {
    RegressionReport report;
    std::vector<StudyPoint> points;
    std::size_t dropped_instruments = 0;
    std::size_t errored_days = 0;
};

/// Simulates `days` sessions per instrument, averages daily LIX, averages
/// LIXI over the final day's snapshots (ADV from the trailing adv_window
/// bars) and regresses mean LIXI on mean LIX. Instruments without a valid
/// day or snapshot are dropped and counted.
///
/// Throws DegenerateRegression for fewer than two usable instruments and
/// InvalidParams for fewer than 20 instruments or 20 days.
StudyResult lixi_vs_lix_study(std::span<const InstrumentParams> universe, int days, std::uint64_t seed,
                              const StudyOptions& options = {});

}  // namespace lix::sim
