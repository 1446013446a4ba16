#include "lix/simlab.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include <Eigen/Dense>

#include "lix/error.hpp"
#include "lix/io.hpp"

namespace lix::sim {

namespace {

// Eight +/-1 steps packed in a byte: net displacement and the extreme prefix
// sums over steps 1..8.
struct ByteWalk {
    int net = 0;
    int max_prefix = 0;
    int min_prefix = 0;
};

constexpr std::array<ByteWalk, 256> make_byte_table() {
    std::array<ByteWalk, 256> table{};
    for (int b = 0; b < 256; ++b) {
        int pos = 0;
        int hi = -8;
        int lo = 8;
        for (int bit = 0; bit < 8; ++bit) {
            pos += ((b >> bit) & 1) ? 1 : -1;
            hi = std::max(hi, pos);
            lo = std::min(lo, pos);
        }
        table[static_cast<std::size_t>(b)] = {pos, hi, lo};
    }
    return table;
}

constexpr auto kByteTable = make_byte_table();

// Running extremes of a +/-1 walk, consuming 64 random bits per engine call.
class LatticeWalk {
public:
    explicit LatticeWalk(Engine& engine) : engine_(engine) {}

    void advance_to(long target) {
        while (step_ < target) {
            if (available_ == 0) {
                bits_ = engine_();
                available_ = 64;
            }
            if (available_ >= 8 && target - step_ >= 8) {
                const auto& w = kByteTable[bits_ & 0xFFu];
                high_ = std::max(high_, pos_ + w.max_prefix);
                low_ = std::min(low_, pos_ + w.min_prefix);
                pos_ += w.net;
                bits_ >>= 8;
                available_ -= 8;
                step_ += 8;
            } else {
                pos_ += (bits_ & 1u) ? 1 : -1;
                high_ = std::max(high_, pos_);
                low_ = std::min(low_, pos_);
                bits_ >>= 1;
                available_ -= 1;
                step_ += 1;
            }
        }
    }

    long position() const { return pos_; }
    long range() const { return high_ - low_; }

private:
    Engine& engine_;
    std::uint64_t bits_ = 0;
    int available_ = 0;
    long step_ = 0;
    long pos_ = 0;
    long high_ = 0;
    long low_ = 0;
};

// Log-price increment source for the continuous models.
class ReturnDraw {
public:
    explicit ReturnDraw(const PathModel& model) : model_(model) {
        if (model.kind == PathKind::StudentTReturns) {
            student_ = std::student_t_distribution<double>(model.dof);
            t_scale_ = model.volatility_per_step / std::sqrt(model.dof / (model.dof - 2.0));
        }
    }

    double operator()(Engine& engine) {
        if (model_.kind == PathKind::StudentTReturns) {
            return t_scale_ * student_(engine);
        }
        return model_.volatility_per_step * normal_(engine);
    }

private:
    const PathModel& model_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::student_t_distribution<double> student_{3.0};
    double t_scale_ = 0.0;
};

// Range of one path at each checkpoint (ascending step counts).
void path_ranges(const PathModel& model, Engine& engine, std::span<const long> checkpoints, double* out) {
    switch (model.kind) {
        case PathKind::ArithmeticRandomWalk: {
            LatticeWalk walk(engine);
            for (std::size_t g = 0; g < checkpoints.size(); ++g) {
                walk.advance_to(checkpoints[g]);
                out[g] = model.volatility_per_step * static_cast<double>(walk.range());
            }
            return;
        }
        case PathKind::LinearDrift:
            for (std::size_t g = 0; g < checkpoints.size(); ++g) {
                out[g] = model.volatility_per_step * static_cast<double>(checkpoints[g]);
            }
            return;
        case PathKind::GaussianReturns:
        case PathKind::StudentTReturns: {
            ReturnDraw draw(model);
            double x = 0.0;
            double hi = 0.0;
            double lo = 0.0;
            long step = 0;
            for (std::size_t g = 0; g < checkpoints.size(); ++g) {
                for (; step < checkpoints[g]; ++step) {
                    x += draw(engine);
                    hi = std::max(hi, x);
                    lo = std::min(lo, x);
                }
                out[g] = model.initial_price * (std::exp(hi) - std::exp(lo));
            }
            return;
        }
    }
}

struct RangeMoments {
    Eigen::VectorXd sum;
    Eigen::MatrixXd cross;
};

constexpr std::size_t kPathsPerChunk = 1024;

}  // namespace

Engine make_engine(std::uint64_t seed, std::uint64_t a, std::uint64_t b) { return Engine(derive_seed(seed, a, b)); }

unsigned worker_threads() {
    if (const char* env = std::getenv("LIX_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const PathModel& model) {
    if (model.steps_per_day < 10) {
        throw Error(ErrorCode::InvalidParams, "steps_per_day", "need at least 10 steps per day");
    }
    if (!std::isfinite(model.volatility_per_step) || model.volatility_per_step < 0.0) {
        throw Error(ErrorCode::InvalidParams, "volatility_per_step", "volatility must be finite and >= 0");
    }
    if (model.kind == PathKind::StudentTReturns && !(model.dof > 2.0)) {
        throw Error(ErrorCode::InvalidParams, "dof", "Student-t degrees of freedom must exceed 2");
    }
    if (!std::isfinite(model.initial_price) || !(model.initial_price > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "initial_price", "initial price must be positive");
    }
}

std::vector<double> simulate_prices(const PathModel& model, Engine& engine) {
    validate(model);
    const auto steps = static_cast<std::size_t>(model.steps_per_day);
    std::vector<double> prices(steps + 1);
    prices[0] = model.initial_price;
    switch (model.kind) {
        case PathKind::ArithmeticRandomWalk: {
            LatticeWalk walk(engine);
            for (std::size_t k = 1; k <= steps; ++k) {
                walk.advance_to(static_cast<long>(k));
                prices[k] = model.initial_price + model.volatility_per_step * static_cast<double>(walk.position());
            }
            break;
        }
        case PathKind::LinearDrift:
            for (std::size_t k = 1; k <= steps; ++k) {
                prices[k] = model.initial_price + model.volatility_per_step * static_cast<double>(k);
            }
            break;
        case PathKind::GaussianReturns:
        case PathKind::StudentTReturns: {
            ReturnDraw draw(model);
            double x = 0.0;
            for (std::size_t k = 1; k <= steps; ++k) {
                x += draw(engine);
                prices[k] = model.initial_price * std::exp(x);
            }
            break;
        }
    }
    for (std::size_t k = 1; k <= steps; ++k) {
        if (!(prices[k] > 0.0) || !std::isfinite(prices[k])) {
            throw Error(ErrorCode::InvalidParams, "volatility_per_step",
                        "simulated price left (0, inf) at step " + std::to_string(k));
        }
    }
    return prices;
}

double expected_relative_range(const PathModel& model) {
    // E[max - min] of Brownian motion over unit time is 2 sqrt(2 / pi).
    const double brownian = 2.0 * std::sqrt(2.0 / std::numbers::pi);
    const double steps = static_cast<double>(model.steps_per_day);
    switch (model.kind) {
        case PathKind::ArithmeticRandomWalk:
            return brownian * model.volatility_per_step * std::sqrt(steps) / model.initial_price;
        case PathKind::LinearDrift:
            return model.volatility_per_step * steps / model.initial_price;
        case PathKind::GaussianReturns:
        case PathKind::StudentTReturns:
            return brownian * model.volatility_per_step * std::sqrt(steps);
    }
    return 0.0;
}

AlphaEstimate estimate_alpha(const PathModel& model, std::size_t n_paths, std::span<const double> time_grid) {
    validate(model);
    if (n_paths < 1000) {
        throw Error(ErrorCode::InvalidParams, "n_paths", "need at least 1000 paths");
    }
    std::vector<double> grid(time_grid.begin(), time_grid.end());
    std::sort(grid.begin(), grid.end());
    for (double f : grid) {
        if (!std::isfinite(f) || !(f > 0.0) || f > 1.0) {
            throw Error(ErrorCode::DegenerateGrid, "time_grid", "fractions must lie in (0, 1]");
        }
    }
    if (std::adjacent_find(grid.begin(), grid.end()) != grid.end() || grid.size() < 5) {
        throw Error(ErrorCode::DegenerateGrid, "time_grid", "need at least five distinct fractions");
    }
    std::vector<long> checkpoints;
    for (double f : grid) {
        const long k = std::lround(f * model.steps_per_day);
        if (k < 1 || (!checkpoints.empty() && k == checkpoints.back())) {
            throw Error(ErrorCode::DegenerateGrid, "time_grid", "fractions collapse onto the same step");
        }
        checkpoints.push_back(k);
    }

    const auto points = static_cast<Eigen::Index>(grid.size());
    const std::size_t chunks = (n_paths + kPathsPerChunk - 1) / kPathsPerChunk;
    std::vector<RangeMoments> partial(chunks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        Eigen::VectorXd ranges(points);
        for (std::size_t c = next++; c < chunks; c = next++) {
            RangeMoments m{Eigen::VectorXd::Zero(points), Eigen::MatrixXd::Zero(points, points)};
            const std::size_t end = std::min(n_paths, (c + 1) * kPathsPerChunk);
            for (std::size_t path = c * kPathsPerChunk; path < end; ++path) {
                Engine engine = make_engine(model.seed, path);
                path_ranges(model, engine, checkpoints, ranges.data());
                m.sum += ranges;
                m.cross.selfadjointView<Eigen::Lower>().rankUpdate(ranges);
            }
            partial[c] = std::move(m);
        }
    };
    const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(chunks));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    // Fixed chunk order keeps the reduction independent of scheduling.
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(points);
    Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(points, points);
    for (const auto& m : partial) {
        sum += m.sum;
        cross += m.cross;
    }
    const Eigen::MatrixXd full_cross = cross.selfadjointView<Eigen::Lower>();

    const double n = static_cast<double>(n_paths);
    const Eigen::VectorXd mean = sum / n;
    const Eigen::MatrixXd cov = (full_cross - n * mean * mean.transpose()) / (n - 1.0);

    const Eigen::VectorXd log_f = Eigen::Map<const Eigen::VectorXd>(grid.data(), points).array().log();
    const Eigen::VectorXd log_m = mean.array().log();
    const auto fit = ols_fit(log_f, log_m);

    // alpha_hat = sum_g w_g log m_g, so d alpha / d m_g = w_g / m_g.
    const Eigen::VectorXd centered = log_f.array() - log_f.mean();
    const Eigen::VectorXd gradient = (centered / centered.squaredNorm()).array() / mean.array();
    const double variance = gradient.dot(cov * gradient) / n;

    AlphaEstimate out;
    out.alpha_hat = fit.slope;
    out.std_error = std::sqrt(std::max(0.0, variance));
    out.n_paths = n_paths;
    out.time_grid = grid;
    out.mean_range.assign(mean.data(), mean.data() + points);
    return out;
}

RegressionReport ols_fit(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::InvalidParams, "y", "x and y differ in length");
    }
    if (x.size() < 2) {
        throw Error(ErrorCode::DegenerateRegression, "x", "need at least two points");
    }
    const Eigen::VectorXd xc = x.array() - x.mean();
    const Eigen::VectorXd yc = y.array() - y.mean();
    const double sxx = xc.squaredNorm();
    if (!(sxx > 0.0)) {
        throw Error(ErrorCode::DegenerateRegression, "x", "x has no spread");
    }
    RegressionReport out;
    out.n_points = static_cast<std::size_t>(x.size());
    out.slope = xc.dot(yc) / sxx;
    out.intercept = y.mean() - out.slope * x.mean();
    const double ss_res = (yc - out.slope * xc).squaredNorm();
    const double ss_tot = yc.squaredNorm();
    out.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    if (x.size() > 2) {
        out.slope_stderr = std::sqrt(ss_res / static_cast<double>(x.size() - 2) / sxx);
    }
    return out;
}

SyntheticSession synth_session(const PathModel& model, double daily_volume, const BookParams& book,
                               std::uint64_t seed, const SessionLayout& layout) {
    validate(model);
    if (!std::isfinite(daily_volume) || !(daily_volume > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "daily_volume", "daily volume must be positive");
    }
    if (book.levels_per_side < 1 || book.snapshots < 1 || !(book.depth_fraction > 0.0) ||
        !(book.spread_factor > 0.0) || !(book.log10_noise >= 0.0) || !(book.min_relative_spread > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "book", "book generator settings out of range");
    }
    if (!(layout.session_length > 0.0) || layout.windows < 1 || layout.windows > model.steps_per_day ||
        book.snapshots > model.steps_per_day) {
        throw Error(ErrorCode::InvalidParams, "layout", "session layout out of range");
    }

    Engine path_engine = make_engine(seed, 0);
    Engine book_engine = make_engine(seed, 1);
    const auto prices = simulate_prices(model, path_engine);
    const long steps = model.steps_per_day;
    const double session = layout.session_length;

    std::vector<double> running_high(prices.size());
    std::vector<double> running_low(prices.size());
    running_high[0] = running_low[0] = prices[0];
    for (std::size_t k = 1; k < prices.size(); ++k) {
        running_high[k] = std::max(running_high[k - 1], prices[k]);
        running_low[k] = std::min(running_low[k - 1], prices[k]);
    }

    SyntheticSession out;
    out.bar = DailyBar{layout.instrument_id, layout.date,      prices.front(), running_high.back(),
                       running_low.back(),  prices.back(), daily_volume};

    out.windows.reserve(static_cast<std::size_t>(layout.windows));
    for (long j = 1; j <= layout.windows; ++j) {
        const auto k = static_cast<std::size_t>(j * steps / layout.windows);
        const double fraction = static_cast<double>(k) / static_cast<double>(steps);
        out.windows.push_back(IntradayWindow{session * fraction, session, daily_volume * fraction,
                                             running_high[k], running_low[k], prices[k]});
    }

    const double reference_range = expected_relative_range(model);
    const int levels = book.levels_per_side;
    std::normal_distribution<double> noise(0.0, book.log10_noise);
    std::uniform_real_distribution<double> level_weight(0.5, 1.5);
    out.snapshots.reserve(static_cast<std::size_t>(book.snapshots));
    for (long j = 0; j < book.snapshots; ++j) {
        const auto k = static_cast<std::size_t>((2 * j + 1) * steps / (2 * book.snapshots));
        const double mid = prices[k];
        const double depth = book.depth_fraction * daily_volume * std::pow(10.0, noise(book_engine));
        double spread = book.spread_factor * reference_range * std::sqrt(depth / daily_volume) *
                        std::pow(10.0, noise(book_engine));
        spread = std::clamp(spread, book.min_relative_spread, 1.0);

        std::vector<BookLevel> bids(static_cast<std::size_t>(levels));
        std::vector<BookLevel> asks(static_cast<std::size_t>(levels));
        for (auto* side : {&bids, &asks}) {
            double total = 0.0;
            for (auto& level : *side) {
                level.volume = level_weight(book_engine);
                total += level.volume;
            }
            for (auto& level : *side) {
                level.volume *= 0.5 * depth / total;
            }
        }
        for (int i = 0; i < levels; ++i) {
            const double offset = spread * (2.0 * i + 1.0) / (2.0 * levels);
            bids[static_cast<std::size_t>(i)].price = mid * (1.0 - offset);
            asks[static_cast<std::size_t>(i)].price = mid * (1.0 + offset);
        }
        const double timestamp = session * static_cast<double>(k) / static_cast<double>(steps);
        out.snapshots.emplace_back(timestamp, std::move(bids), std::move(asks));
    }
    return out;
}

std::vector<InstrumentParams> default_universe(std::size_t count, double lix_low, double lix_high,
                                               std::uint64_t seed) {
    if (count < 2 || !(lix_high > lix_low)) {
        throw Error(ErrorCode::InvalidParams, "universe", "need two or more instruments and lix_high > lix_low");
    }
    constexpr int kSteps = 500;
    std::vector<InstrumentParams> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Engine engine = make_engine(seed, 0x756e6976ULL, i);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> normal(0.0, 1.0);
        const double daily_vol = 0.01 * std::pow(4.0, unit(engine));     // 1% .. 4%
        const double price = 5.0 * std::pow(100.0, unit(engine));        // 5 .. 500
        const double target = lix_low + (lix_high - lix_low) * static_cast<double>(i) / static_cast<double>(count - 1);

        InstrumentParams p;
        p.id = "SYN" + std::to_string(i + 1);
        p.model.kind = PathKind::GaussianReturns;
        p.model.steps_per_day = kSteps;
        p.model.volatility_per_step = daily_vol / std::sqrt(static_cast<double>(kSteps));
        p.model.initial_price = price;
        p.daily_volume = std::pow(10.0, target) * expected_relative_range(p.model);
        p.book.spread_factor = std::pow(10.0, 0.1 * normal(engine));
        out.push_back(std::move(p));
    }
    return out;
}

StudyResult lixi_vs_lix_study(std::span<const InstrumentParams> universe, int days, std::uint64_t seed,
                              const StudyOptions& options) {
    if (universe.size() < 2) {
        throw Error(ErrorCode::DegenerateRegression, "universe", "need at least two instruments");
    }
    if (universe.size() < 20) {
        throw Error(ErrorCode::InvalidParams, "universe", "need at least 20 instruments");
    }
    if (days < 20) {
        throw Error(ErrorCode::InvalidParams, "days", "need at least 20 days");
    }
    if (!(options.price_scale > 0.0) || options.adv_window < 1) {
        throw Error(ErrorCode::InvalidParams, "options", "price scale and ADV window must be positive");
    }

    StudyResult result;
    const Date first_day{std::chrono::year{2013}, std::chrono::month{1}, std::chrono::day{1}};
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const auto& inst = universe[i];
        PathModel model = inst.model;
        model.initial_price *= options.price_scale;

        std::vector<DailyBar> bars;
        std::vector<OrderBookSnapshot> last_books;
        double lix_sum = 0.0;
        std::size_t lix_days = 0;
        for (int d = 0; d < days; ++d) {
            Engine volume_engine = make_engine(seed, i, 2 * static_cast<std::uint64_t>(d));
            std::normal_distribution<double> noise(0.0, inst.volume_log10_noise);
            const double volume = inst.daily_volume * std::pow(10.0, noise(volume_engine));

            SessionLayout layout;
            layout.instrument_id = inst.id;
            layout.date = std::chrono::sys_days{first_day} + std::chrono::days{d};
            layout.session_length = options.session_length;
            auto session = synth_session(model, volume, inst.book,
                                         derive_seed(seed, i, 2 * static_cast<std::uint64_t>(d) + 1), layout);
            try {
                lix_sum += lix_daily(session.bar).value();
                ++lix_days;
            } catch (const Error&) {
                ++result.errored_days;
            }
            bars.push_back(std::move(session.bar));
            if (d == days - 1) {
                last_books = std::move(session.snapshots);
            }
        }

        double lixi_sum = 0.0;
        std::size_t lixi_count = 0;
        try {
            const auto adv = io::compute_adv(bars, options.adv_window, options.session_length);
            for (const auto& book : last_books) {
                try {
                    lixi_sum += lixi(book, adv, options.scaling).value();
                    ++lixi_count;
                } catch (const Error&) {
                }
            }
        } catch (const Error&) {
        }

        if (lix_days == 0 || lixi_count == 0) {
            ++result.dropped_instruments;
            continue;
        }
        result.points.push_back({inst.id, lix_sum / static_cast<double>(lix_days),
                                 lixi_sum / static_cast<double>(lixi_count), lix_days});
    }

    if (result.points.size() < 2) {
        throw Error(ErrorCode::DegenerateRegression, "universe", "fewer than two usable instruments");
    }
    Eigen::VectorXd x(static_cast<Eigen::Index>(result.points.size()));
    Eigen::VectorXd y(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        x[j] = result.points[static_cast<std::size_t>(j)].mean_lix;
        y[j] = result.points[static_cast<std::size_t>(j)].mean_lixi;
    }
    result.report = ols_fit(x, y);
    return result;
}

}  // namespace lix::sim
