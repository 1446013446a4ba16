#include "lix/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lix/comparative.hpp"
#include "lix/costmodel.hpp"
#include "lix/error.hpp"
#include "lix/io.hpp"
#include "lix/measures.hpp"
#include "lix/orderbook.hpp"
#include "lix/portfolio.hpp"
#include "lix/simlab.hpp"

namespace lix::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Auto, Table, Json, Csv };

struct Cell {
    std::string text;
    bool numeric = false;
};

Cell blank() { return {}; }
Cell text(std::string s) { return {std::move(s), false}; }

std::string format_double(double value, int precision, char conversion) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::NonFinite, "output", "refusing to print a non-finite value");
    }
    const char spec[] = {'%', '.', '*', conversion, '\0'};
    char buf[128];
    std::snprintf(buf, sizeof buf, spec, precision, value);
    return buf;
}

Cell integer(long long value) { return {std::to_string(value), true}; }

// A result is either one record (object) or a list of rows; `meta` holds
// summary fields that accompany the rows.
class Report {
public:
    explicit Report(std::vector<std::string> columns, bool single = false)
        : columns_(std::move(columns)), single_(single) {}

    void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
    void meta(const std::string& key, Cell value) { meta_.emplace_back(key, std::move(value)); }

    void render(std::ostream& out, std::ostream& err, Format format) const {
        switch (format) {
            case Format::Json: render_json(out); break;
            case Format::Csv: render_csv(out, err); break;
            case Format::Table:
            case Format::Auto: render_table(out); break;
        }
    }

private:
    static ordered_json to_json(const Cell& cell) {
        if (cell.text.empty()) {
            return nullptr;
        }
        if (cell.numeric) {
            if (cell.text.find_first_of(".eE") == std::string::npos) {
                return std::strtoll(cell.text.c_str(), nullptr, 10);
            }
            return std::strtod(cell.text.c_str(), nullptr);
        }
        return cell.text;
    }

    void render_json(std::ostream& out) const {
        ordered_json doc = ordered_json::object();
        auto record = [&](const std::vector<Cell>& row) {
            ordered_json obj = ordered_json::object();
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                obj[columns_[c]] = to_json(row[c]);
            }
            return obj;
        };
        if (single_) {
            doc = record(rows_.at(0));
        } else {
            doc["rows"] = ordered_json::array();
            for (const auto& row : rows_) {
                doc["rows"].push_back(record(row));
            }
        }
        for (const auto& [key, value] : meta_) {
            doc[key] = to_json(value);
        }
        out << doc.dump(2) << '\n';
    }

    void render_csv(std::ostream& out, std::ostream& err) const {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            out << (c ? "," : "") << columns_[c];
        }
        out << '\n';
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << row[c].text;
            }
            out << '\n';
        }
        for (const auto& [key, value] : meta_) {
            err << "# " << key << ": " << value.text << '\n';
        }
    }

    void render_table(std::ostream& out) const {
        if (single_) {
            std::size_t width = 0;
            for (const auto& c : columns_) {
                width = std::max(width, c.size());
            }
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                out << columns_[c] << std::string(width - columns_[c].size() + 2, ' ')
                    << (rows_.at(0)[c].text.empty() ? "-" : rows_.at(0)[c].text) << '\n';
            }
        } else {
            std::vector<std::size_t> widths(columns_.size());
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                widths[c] = columns_[c].size();
                for (const auto& row : rows_) {
                    widths[c] = std::max(widths[c], std::max<std::size_t>(row[c].text.size(), 1));
                }
            }
            auto line = [&](auto cell_text) {
                for (std::size_t c = 0; c < columns_.size(); ++c) {
                    const std::string s = cell_text(c);
                    out << (c ? "  " : "") << std::string(widths[c] - s.size(), ' ') << s;
                }
                out << '\n';
            };
            line([&](std::size_t c) { return columns_[c]; });
            for (const auto& row : rows_) {
                line([&](std::size_t c) { return row[c].text.empty() ? std::string("-") : row[c].text; });
            }
        }
        for (const auto& [key, value] : meta_) {
            out << key << ": " << (value.text.empty() ? "-" : value.text) << '\n';
        }
    }

    std::vector<std::string> columns_;
    bool single_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, Cell>> meta_;
};

int default_precision() {
    if (const char* env = std::getenv("LIX_PRECISION")) {
        char* end = nullptr;
        const long p = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && p >= 0 && p <= 17) {
            return static_cast<int>(p);
        }
    }
    return 6;
}

struct GlobalOptions {
    int precision = default_precision();
    std::string format = "auto";

    Cell fixed(double v) const { return {format_double(v, precision, 'f'), true}; }
    Cell sci(double v) const { return {format_double(v, precision, 'e'), true}; }

    Format resolved(Format fallback) const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        if (format == "table") return Format::Table;
        return fallback;
    }
};

ScalingParams scaling_from(double alpha) { return ScalingParams(alpha); }

// ---------------------------------------------------------------------------

struct LixArgs {
    std::string bars;
    std::string manifest;
    std::string date;
    bool all = false;
};

int cmd_lix(const LixArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    std::vector<DailyBar> bars;
    if (!a.manifest.empty()) {
        const auto m = io::load_manifest(a.manifest);
        bars = io::parse_daily_bars(m.bar_file, m.instrument_id);
    } else if (!a.bars.empty()) {
        bars = io::parse_daily_bars(std::filesystem::path(a.bars));
    } else {
        throw Error(ErrorCode::InvalidParams, "bars", "give a bars file or --manifest");
    }
    if (bars.empty()) {
        throw Error(ErrorCode::EmptyDataset, a.bars.empty() ? a.manifest : a.bars, "file holds no bars");
    }

    Report report({"date", "lix"});
    if (!a.date.empty()) {
        const Date wanted = io::parse_date(a.date, "--date");
        const auto it = std::find_if(bars.begin(), bars.end(), [&](const DailyBar& b) { return b.date == wanted; });
        if (it == bars.end()) {
            throw Error(ErrorCode::InvalidParams, "--date", "no bar dated " + a.date);
        }
        try {
            report.add({text(to_string(it->date)), g.fixed(lix_daily(*it).value())});
        } catch (const Error& e) {
            throw Error(e.code(), a.date + " " + e.where(), e.what());
        }
        report.render(out, err, g.resolved(Format::Table));
        return kExitOk;
    }

    long long skipped = 0;
    for (const auto& bar : bars) {
        try {
            report.add({text(to_string(bar.date)), g.fixed(lix_daily(bar).value())});
        } catch (const Error& e) {
            ++skipped;
            err << "skipped " << to_string(bar.date) << ": " << e.what() << '\n';
        }
    }
    report.meta("skipped_days", integer(skipped));
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct IntradayArgs {
    double volume = 0.0;
    double price = 0.0;
    double high = 0.0;
    double low = 0.0;
    double elapsed = 0.0;
    double session = io::kDefaultSessionLength;
    double alpha = ScalingParams::kRandomWalkAlpha;
};

int cmd_lix_intraday(const IntradayArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const IntradayWindow window{a.elapsed, a.session, a.volume, a.high, a.low, a.price};
    const auto raw = lix_intraday_raw(window);
    const auto scaled = time_scale_to_daily(raw, a.elapsed, a.session, scaling_from(a.alpha));
    Report report({"lix_raw", "lix", "alpha"}, true);
    report.add({g.fixed(raw.value()), g.fixed(scaled.value()), g.fixed(a.alpha)});
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct LixiArgs {
    std::string snapshots;
    std::string manifest;
    std::string adv_from;
    int adv_window = io::kDefaultAdvWindow;
    double alpha = ScalingParams::kRandomWalkAlpha;
    double session = io::kDefaultSessionLength;
    bool decompose = false;
};

int cmd_lixi(const LixiArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    std::vector<OrderBookSnapshot> books;
    std::vector<DailyBar> bars;
    double session = a.session;
    if (!a.manifest.empty()) {
        const auto m = io::load_manifest(a.manifest);
        if (!m.snapshot_file) {
            throw Error(ErrorCode::InvalidParams, a.manifest, "manifest has no snapshot_file");
        }
        books = io::parse_book_snapshots(*m.snapshot_file);
        bars = io::parse_daily_bars(a.adv_from.empty() ? m.bar_file : std::filesystem::path(a.adv_from),
                                    m.instrument_id);
        session = m.session_length;
    } else {
        if (a.snapshots.empty() || a.adv_from.empty()) {
            throw Error(ErrorCode::InvalidParams, "--adv-from", "give a snapshots file and --adv-from bars file");
        }
        books = io::parse_book_snapshots(std::filesystem::path(a.snapshots));
        bars = io::parse_daily_bars(std::filesystem::path(a.adv_from));
    }
    if (books.empty()) {
        throw Error(ErrorCode::EmptyDataset, a.snapshots.empty() ? a.manifest : a.snapshots, "no snapshots");
    }
    const auto adv = io::compute_adv(bars, a.adv_window, session);
    const auto scaling = scaling_from(a.alpha);

    std::vector<std::string> columns{"timestamp", "lixi_tau", "lixi", "relative_spread", "n_bid", "n_ask"};
    if (a.decompose) {
        columns.insert(columns.end(), {"spread_term", "depth_term", "adv_term", "total"});
    }
    Report report(columns);
    for (const auto& book : books) {
        const std::string where = "t=" + g.fixed(book.timestamp()).text;
        try {
            const auto d = lixi_decomposed(book, adv);
            std::vector<Cell> row{g.fixed(book.timestamp()),
                                  g.fixed(lixi_tau(book).value()),
                                  g.fixed(lixi(book, adv, scaling).value()),
                                  g.sci(relative_spread(book)),
                                  integer(static_cast<long long>(d.bid_levels)),
                                  integer(static_cast<long long>(d.ask_levels))};
            if (a.decompose) {
                row.insert(row.end(), {g.fixed(d.spread_term), g.fixed(d.depth_term), g.fixed(d.adv_term),
                                       g.fixed(d.total)});
            }
            report.add(std::move(row));
        } catch (const Error& e) {
            throw Error(e.code(), where + " " + e.where(), e.what());
        }
    }
    report.meta("adv", g.fixed(adv.adv));
    report.meta("adv_window", integer(adv.window_days));
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct CostArgs {
    double shares = 0.0;
    double price = 0.0;
    double lix = 0.0;
    double slice_t = 0.0;
    double session = io::kDefaultSessionLength;
    double alpha = ScalingParams::kRandomWalkAlpha;
};

int cmd_cost(const CostArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const ExecutionPlan plan(a.shares, a.price, LiquidityIndex(a.lix, IndexKind::Daily), a.slice_t, a.session,
                             scaling_from(a.alpha));
    Report report({"price_impact", "cost_single_shot", "cost_sliced", "cost_per_unit"}, true);
    report.add({g.sci(price_impact(plan)), g.sci(cost_single_shot(plan)), g.sci(cost_sliced(plan)),
                g.sci(cost_per_unit(plan))});
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct BasketArgs {
    std::string positions;
    std::optional<double> etf_lix;
    bool strict = false;
};

int cmd_basket(const BasketArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    auto positions = io::parse_positions(std::filesystem::path(a.positions));
    std::optional<LiquidityIndex> etf;
    if (a.etf_lix) {
        etf = LiquidityIndex(*a.etf_lix, IndexKind::Daily);
    }
    const BasketSpec spec(std::move(positions), etf, a.strict ? WeightMode::Strict : WeightMode::Normalize);
    if (std::abs(spec.raw_weight_sum() - 1.0) > BasketSpec::kWeightTolerance) {
        err << "warning: weights summed to " << format_double(spec.raw_weight_sum(), 12, 'g')
            << "; normalized to 1\n";
    }
    const auto basket = basket_lix(spec);
    Report report({"basket_lix", "etf_lix", "lix", "positions"}, true);
    if (etf) {
        report.add({g.fixed(basket.value()), g.fixed(etf->value()), g.fixed(basket_with_etf_lix(spec).value()),
                    integer(static_cast<long long>(spec.positions().size()))});
    } else {
        report.add({g.fixed(basket.value()), blank(), g.fixed(basket.value()),
                    integer(static_cast<long long>(spec.positions().size()))});
    }
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct CompareArgs {
    std::string bars;
    double shares_outstanding = 0.0;
};

int cmd_compare(const CompareArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    auto bars = io::parse_daily_bars(std::filesystem::path(a.bars));
    if (bars.empty()) {
        throw Error(ErrorCode::EmptyDataset, a.bars, "file holds no bars");
    }
    const MultiDayWindow window(bars, a.shares_outstanding);

    std::map<Date, double> illiq;
    if (bars.size() >= 2) {
        for (const auto& term : amihud_terms(window)) {
            illiq[term.date] = term.value;
        }
    }
    Report report({"date", "lix", "illiq_term", "hui_heubel"});
    for (std::size_t i = 0; i < bars.size(); ++i) {
        std::vector<Cell> row{text(to_string(bars[i].date))};
        try {
            row.push_back(g.fixed(lix_daily(bars[i]).value()));
        } catch (const Error&) {
            row.push_back(blank());
        }
        const auto it = illiq.find(bars[i].date);
        row.push_back(it == illiq.end() ? blank() : g.sci(it->second));
        if (i + 1 >= kHuiHeubelDays) {
            try {
                const MultiDayWindow trailing(
                    std::vector<DailyBar>(bars.begin() + static_cast<long>(i + 1 - kHuiHeubelDays),
                                          bars.begin() + static_cast<long>(i + 1)),
                    a.shares_outstanding);
                row.push_back(g.fixed(hui_heubel(trailing)));
            } catch (const Error&) {
                row.push_back(blank());
            }
        } else {
            row.push_back(blank());
        }
        report.add(std::move(row));
    }
    report.meta("amihud_illiq", bars.size() >= 2 ? g.sci(amihud_illiq(window)) : blank());
    report.render(out, err, g.resolved(Format::Table));
    return kExitOk;
}

struct CalibrateArgs {
    std::string model = "rw";
    std::size_t paths = 100000;
    std::uint64_t seed = 1;
    int steps = 10000;
    double volatility = 0.01;
    std::vector<double> grid = sim::default_time_grid();
};

sim::PathModel parse_model(const std::string& spec) {
    sim::PathModel model;
    if (spec == "rw") {
        model.kind = sim::PathKind::ArithmeticRandomWalk;
    } else if (spec == "gauss") {
        model.kind = sim::PathKind::GaussianReturns;
    } else if (spec.starts_with("t:")) {
        model.kind = sim::PathKind::StudentTReturns;
        model.dof = io::parse_number(spec.substr(2), "--model");
    } else if (spec == "drift") {
        model.kind = sim::PathKind::LinearDrift;
    } else {
        throw Error(ErrorCode::InvalidParams, "--model", "expected rw, gauss, t:<dof> or drift, got `" + spec + "`");
    }
    return model;
}

int cmd_calibrate(const CalibrateArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    auto model = parse_model(a.model);
    model.seed = a.seed;
    model.steps_per_day = a.steps;
    model.volatility_per_step = a.volatility;
    if (model.kind != sim::PathKind::ArithmeticRandomWalk && model.kind != sim::PathKind::LinearDrift) {
        // Log-return models take a per-step sd; keep the default daily move near 1%.
        model.volatility_per_step = a.volatility / std::sqrt(static_cast<double>(a.steps));
    }
    const auto est = sim::estimate_alpha(model, a.paths, a.grid);

    const auto format = g.resolved(Format::Json);
    if (format == Format::Json) {
        ordered_json doc;
        doc["model"] = a.model;
        doc["alpha_hat"] = std::strtod(g.fixed(est.alpha_hat).text.c_str(), nullptr);
        doc["stderr"] = std::strtod(g.sci(est.std_error).text.c_str(), nullptr);
        doc["n_paths"] = est.n_paths;
        doc["seed"] = a.seed;
        doc["steps_per_day"] = a.steps;
        doc["time_grid"] = est.time_grid;
        ordered_json ranges = ordered_json::array();
        for (double r : est.mean_range) {
            ranges.push_back(std::strtod(g.sci(r).text.c_str(), nullptr));
        }
        doc["mean_range"] = ranges;
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    Report report({"fraction", "mean_range"});
    for (std::size_t i = 0; i < est.time_grid.size(); ++i) {
        report.add({g.fixed(est.time_grid[i]), g.sci(est.mean_range[i])});
    }
    report.meta("alpha_hat", g.fixed(est.alpha_hat));
    report.meta("stderr", g.sci(est.std_error));
    report.meta("n_paths", integer(static_cast<long long>(est.n_paths)));
    report.render(out, err, format);
    return kExitOk;
}

struct StudyArgs {
    std::size_t instruments = 50;
    int days = 20;
    std::uint64_t seed = 7;
    std::string points;
};

void write_points(std::ostream& out, const sim::StudyResult& result, const GlobalOptions& g) {
    out << "instrument,mean_lix,mean_lixi,valid_days\n";
    for (const auto& p : result.points) {
        out << p.id << ',' << g.fixed(p.mean_lix).text << ',' << g.fixed(p.mean_lixi).text << ',' << p.valid_days
            << '\n';
    }
}

int cmd_study(const StudyArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    if (a.instruments < 2) {
        throw Error(ErrorCode::DegenerateRegression, "--instruments", "need at least two instruments");
    }
    const auto universe = sim::default_universe(a.instruments, 5.0, 10.0, a.seed);
    const auto result = sim::lixi_vs_lix_study(universe, a.days, a.seed);

    if (!a.points.empty()) {
        std::ofstream file(a.points);
        if (!file) {
            throw Error(ErrorCode::Io, a.points, "cannot write points file");
        }
        write_points(file, result, g);
    }
    const auto format = g.resolved(Format::Json);
    if (format == Format::Csv) {
        write_points(out, result, g);
        return kExitOk;
    }
    double lo = result.points.front().mean_lix;
    double hi = lo;
    for (const auto& p : result.points) {
        lo = std::min(lo, p.mean_lix);
        hi = std::max(hi, p.mean_lix);
    }
    Report report({"slope", "intercept", "r_squared", "n_points", "dropped_instruments", "errored_days", "lix_min",
                   "lix_max", "seed"},
                  true);
    report.add({g.fixed(result.report.slope), g.fixed(result.report.intercept), g.fixed(result.report.r_squared),
                integer(static_cast<long long>(result.report.n_points)),
                integer(static_cast<long long>(result.dropped_instruments)),
                integer(static_cast<long long>(result.errored_days)), g.fixed(lo), g.fixed(hi),
                integer(static_cast<long long>(a.seed))});
    report.render(out, err, format);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Liquidity index (LIX) toolkit", "lix"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    GlobalOptions global;
    app.add_option("--precision", global.precision, "Digits after the decimal point")->check(CLI::Range(0, 17));
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"auto", "table", "json", "csv"}));

    std::function<int()> action;

    LixArgs lix_args;
    auto* lix_cmd = app.add_subcommand("lix", "Daily LIX for each bar in a CSV file");
    lix_cmd->add_option("bars", lix_args.bars, "CSV with date,open,high,low,close,volume");
    lix_cmd->add_option("--manifest", lix_args.manifest, "JSON dataset manifest instead of a bars file");
    auto* date_opt = lix_cmd->add_option("--date", lix_args.date, "Only this ISO date");
    auto* all_flag = lix_cmd->add_flag("--all", lix_args.all, "Every bar (default)");
    date_opt->excludes(all_flag);
    lix_cmd->callback([&] { action = [&] { return cmd_lix(lix_args, global, out, err); }; });

    IntradayArgs intraday;
    auto* intraday_cmd = app.add_subcommand("lix-intraday", "Raw and time-scaled intraday LIX");
    intraday_cmd->add_option("--volume", intraday.volume, "Cumulative volume since the open")->required();
    intraday_cmd->add_option("--price", intraday.price, "Last traded price")->required();
    intraday_cmd->add_option("--high", intraday.high, "High since the open")->required();
    intraday_cmd->add_option("--low", intraday.low, "Low since the open")->required();
    intraday_cmd->add_option("--elapsed", intraday.elapsed, "Seconds since the open")->required();
    intraday_cmd->add_option("--session", intraday.session, "Session length in seconds");
    intraday_cmd->add_option("--alpha", intraday.alpha, "Range scaling exponent");
    intraday_cmd->callback([&] { action = [&] { return cmd_lix_intraday(intraday, global, out, err); }; });

    LixiArgs lixi_args;
    auto* lixi_cmd = app.add_subcommand("lixi", "Instantaneous liquidity from order-book snapshots");
    lixi_cmd->add_option("snapshots", lixi_args.snapshots, "CSV with timestamp,side,level,price,volume");
    lixi_cmd->add_option("--manifest", lixi_args.manifest, "JSON dataset manifest");
    lixi_cmd->add_option("--adv-from", lixi_args.adv_from, "Daily bars used for ADV");
    lixi_cmd->add_option("--adv-window", lixi_args.adv_window, "Trailing days in the ADV")->check(CLI::PositiveNumber);
    lixi_cmd->add_option("--alpha", lixi_args.alpha, "Range scaling exponent");
    lixi_cmd->add_option("--session", lixi_args.session, "Session length in seconds");
    lixi_cmd->add_flag("--decompose", lixi_args.decompose, "Print the spread/depth/ADV split (alpha = 1/2)");
    lixi_cmd->callback([&] { action = [&] { return cmd_lixi(lixi_args, global, out, err); }; });

    CostArgs cost_args;
    auto* cost_cmd = app.add_subcommand("cost", "Execution cost implied by a LIX value");
    cost_cmd->add_option("--shares", cost_args.shares, "Shares to buy")->required();
    cost_cmd->add_option("--price", cost_args.price, "Arrival price")->required();
    cost_cmd->add_option("--lix", cost_args.lix, "Liquidity index")->required();
    cost_cmd->add_option("--slice-t", cost_args.slice_t, "Seconds per trade")->required();
    cost_cmd->add_option("--session", cost_args.session, "Session length in seconds")->required();
    cost_cmd->add_option("--alpha", cost_args.alpha, "Range scaling exponent");
    cost_cmd->callback([&] { action = [&] { return cmd_cost(cost_args, global, out, err); }; });

    BasketArgs basket_args;
    auto* basket_cmd = app.add_subcommand("basket", "Liquidity of a basket, optionally with an ETF leg");
    basket_cmd->add_option("positions", basket_args.positions, "CSV with instrument,beta,lix")->required();
    basket_cmd->add_option("--etf-lix", basket_args.etf_lix, "LIX of the ETF traded as its own security");
    basket_cmd->add_flag("--strict", basket_args.strict, "Reject weights that do not sum to 1");
    basket_cmd->callback([&] { action = [&] { return cmd_basket(basket_args, global, out, err); }; });

    CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand("compare", "LIX next to Hui-Heubel and Amihud ILLIQ");
    compare_cmd->add_option("bars", compare_args.bars, "CSV with date,open,high,low,close,volume")->required();
    compare_cmd->add_option("--shares-outstanding", compare_args.shares_outstanding, "Shares outstanding")
        ->required();
    compare_cmd->callback([&] { action = [&] { return cmd_compare(compare_args, global, out, err); }; });

    CalibrateArgs calibrate_args;
    auto* calibrate_cmd = app.add_subcommand("calibrate-alpha", "Monte Carlo estimate of the range exponent");
    calibrate_cmd->add_option("--model", calibrate_args.model, "rw | gauss | t:<dof> | drift");
    calibrate_cmd->add_option("--paths", calibrate_args.paths, "Simulated sessions");
    calibrate_cmd->add_option("--seed", calibrate_args.seed, "Random seed");
    calibrate_cmd->add_option("--steps", calibrate_args.steps, "Steps per session");
    calibrate_cmd->add_option("--volatility", calibrate_args.volatility,
                              "Step size (rw, drift) or daily sd of log returns (gauss, t)");
    calibrate_cmd->add_option("--grid", calibrate_args.grid, "Time fractions in (0, 1]")->delimiter(',');
    calibrate_cmd->callback([&] { action = [&] { return cmd_calibrate(calibrate_args, global, out, err); }; });

    StudyArgs study_args;
    auto* study_cmd = app.add_subcommand("study", "Synthetic LIXI vs LIX regression");
    study_cmd->add_option("--instruments", study_args.instruments, "Instruments in the universe");
    study_cmd->add_option("--days", study_args.days, "Days per instrument");
    study_cmd->add_option("--seed", study_args.seed, "Random seed");
    study_cmd->add_option("--points", study_args.points, "Write per-instrument points CSV here");
    study_cmd->callback([&] { action = [&] { return cmd_study(study_args, global, out, err); }; });

    if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown subcommand `" << args.front() << "`\n" << app.help();
        return kExitInvalidInput;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitInvalidInput;
    }

    try {
        return action ? action() : kExitInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace lix::cli
