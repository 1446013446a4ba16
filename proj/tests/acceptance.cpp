// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (exit status 0 iff it passes)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lix/cli.hpp"
#include "lix/comparative.hpp"
#include "lix/costmodel.hpp"
#include "lix/error.hpp"
#include "lix/measures.hpp"
#include "lix/orderbook.hpp"
#include "lix/portfolio.hpp"
#include "lix/simlab.hpp"

using namespace lix;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += (ok ? "" : "FAILED ") + what;
    }
};

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Date day(int offset) {
    return Date{std::chrono::sys_days(Date{std::chrono::year{2013}, std::chrono::month{3}, std::chrono::day{1}}) +
                std::chrono::days(offset)};
}

OrderBookSnapshot random_book(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> n_levels(1, 10);
    const double mid = std::pow(10.0, 4 * u(rng) - 1);
    const double half_tick = mid * std::pow(10.0, -4 + 3 * u(rng));
    std::vector<BookLevel> bids, asks;
    double p = mid - half_tick;
    for (int i = n_levels(rng); i > 0; --i) {
        bids.push_back({p * scale, std::pow(10.0, 1 + 5 * u(rng))});
        p -= half_tick * (0.1 + u(rng));
    }
    p = mid + half_tick;
    for (int i = n_levels(rng); i > 0; --i) {
        asks.push_back({p * scale, std::pow(10.0, 1 + 5 * u(rng))});
        p += half_tick * (0.1 + u(rng));
    }
    return OrderBookSnapshot(0.0, std::move(bids), std::move(asks));
}

BasketPosition position(double beta, double lix, std::string id = "I") {
    return {std::move(id), beta, LiquidityIndex(lix, IndexKind::Daily)};
}

std::vector<BasketPosition> random_positions(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int count = 1 + static_cast<int>(rng() % 12);
    std::vector<BasketPosition> out;
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        out.push_back(position(0.01 + u(rng), 3 + 9 * u(rng), "I" + std::to_string(i)));
        sum += out.back().beta;
    }
    for (auto& p : out) p.beta /= sum;
    return out;
}

// ---------------------------------------------------------------------------

Verdict ac1() {
    Verdict v;
    const auto start = Clock::now();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto book = random_book(rng);
        const AdvContext ctx{std::pow(10.0, 2 + 7 * u(rng)), 20, 23400};
        worst = std::max(worst, std::fabs(lixi_decomposed(book, ctx).total - lixi(book, ctx).value()));
    }
    const double elapsed = seconds_since(start);
    v.require(worst < 1e-12, "max |decomposed - lixi| = " + fmt("%.3g", worst) + " < 1e-12 over 1000 books");
    v.require(elapsed < 1.0, "runtime " + fmt("%.3f", elapsed) + " s < 1 s");
    return v;
}

Verdict ac2() {
    Verdict v;
    bool b1 = true;
    for (double l : {-3.0, 0.0, 4.5, 7.0, 9.87654321, 30.0}) {
        b1 = b1 && basket_lix(BasketSpec({position(1.0, l)})).value() == l;
    }
    v.require(b1, "B.1 single instrument returns its LIX exactly");

    double worst_b2 = 0.0;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double l = 12 * u(rng);
        const double b = 1e-6 + (1 - 2e-6) * u(rng);
        const double value = basket_lix(BasketSpec({position(b, l), position(1.0 - b, l)})).value();
        worst_b2 = std::max(worst_b2, std::fabs(value - l));
    }
    v.require(worst_b2 < 1e-12, "B.2 equal liquidity, max |basket - LIX1| = " + fmt("%.3g", worst_b2));

    // Literal reading: equal weights, LIX2 >= LIX1 => basket >= LIX1 + log10(2) - 1e-12.
    double worst_gap = 0.0;
    double at_gap = 0.0;
    int violations = 0;
    int checked = 0;
    for (double l1 : {0.0, 5.0, 6.0, 8.0}) {
        for (int k = 0; k <= 200; ++k) {
            const double l2 = l1 + 0.1 * k;
            const double value = basket_lix(BasketSpec({position(0.5, l1), position(0.5, l2)})).value();
            const double deficit = (l1 + std::log10(2.0)) - value;
            ++checked;
            if (deficit > 1e-12) {
                ++violations;
            }
            if (deficit > worst_gap) {
                worst_gap = deficit;
                at_gap = l2 - l1;
            }
        }
    }
    v.require(violations == 0, "B.3 basket >= LIX1 + log10(2) - 1e-12 for LIX2 >= LIX1: " +
                                   std::to_string(violations) + "/" + std::to_string(checked) +
                                   " violations, worst deficit " + fmt("%.6f", worst_gap) + " at LIX2 - LIX1 = " +
                                   fmt("%.1f", at_gap));
    const double six_nine = basket_lix(BasketSpec({position(0.5, 6), position(0.5, 9)})).value();
    v.require(six_nine > 6.3, "B.3 paper form basket(6, 9) = " + fmt("%.6f", six_nine) + " > LIX1 + 0.3");
    return v;
}

Verdict ac3() {
    Verdict v;
    sim::PathModel rw;
    rw.kind = sim::PathKind::ArithmeticRandomWalk;
    rw.seed = 1;
    const auto start = Clock::now();
    const auto est = sim::estimate_alpha(rw, 100000);
    const double elapsed = seconds_since(start);
    v.require(est.alpha_hat >= 0.48 && est.alpha_hat <= 0.52,
              "random walk alpha_hat = " + fmt("%.5f", est.alpha_hat) + " in [0.48, 0.52]");
    v.require(est.std_error < 0.01, "stderr = " + fmt("%.2e", est.std_error) + " < 0.01");
    v.require(elapsed < 60.0, "runtime " + fmt("%.2f", elapsed) + " s < 60 s");

    sim::PathModel drift = rw;
    drift.kind = sim::PathKind::LinearDrift;
    const auto d = sim::estimate_alpha(drift, 1000);
    v.require(std::fabs(d.alpha_hat - 1.0) <= 1e-9, "linear drift alpha_hat = " + fmt("%.12f", d.alpha_hat));
    return v;
}

Verdict ac4() {
    Verdict v;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (double alpha : {0.5, 0.6}) {
        for (int session = 0; session < 50; ++session) {
            const double T = 3600 + 30000 * u(rng);
            const double V = std::pow(10.0, 3 + 6 * u(rng));
            const double low = std::pow(10.0, 3 * u(rng));
            const double range = low * (0.001 + 0.1 * u(rng));
            const double close = low;
            const double daily = lix_daily(DailyBar{"S", day(0), close, low + range, low, close, V}).value();
            for (int j = 1; j <= 100; ++j) {
                const double f = j / 100.0;
                const double t = T * f;
                const double high = low + range * std::pow(f, alpha);
                const IntradayWindow w{t, T, V * f, high, low, close};
                const double scaled = time_scale_to_daily(lix_intraday_raw(w), t, T, ScalingParams(alpha)).value();
                worst = std::max(worst, std::fabs(scaled - daily));
            }
        }
    }
    v.require(worst < 1e-10, "max |scaled intraday - daily| = " + fmt("%.3g", worst) +
                                 " < 1e-10 over 100-point grid, alpha in {0.5, 0.6}, 50 sessions each");
    return v;
}

Verdict ac5() {
    Verdict v;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double T = 23400;
    double worst_shot = 0.0, worst_unit = 0.0, worst_basket = 0.0;
    auto rel = [](double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); };
    for (int i = 0; i < 10000; ++i) {
        const double n = std::floor(std::pow(10.0, 7 * u(rng))) + 1;
        const double p = std::pow(10.0, 4 * u(rng) - 1);
        const double t = T * (0.001 + 0.999 * u(rng));
        const ScalingParams scaling(0.3 + 0.7 * u(rng));
        const ExecutionPlan plan(n, p, LiquidityIndex(2 + 10 * u(rng), IndexKind::Daily), t, T, scaling);
        worst_shot = std::max(worst_shot, rel(cost_single_shot(plan), n * cost_sliced(plan)));
        worst_unit = std::max(worst_unit, rel(cost_sliced(plan), n * p * cost_per_unit(plan)));

        const auto positions = random_positions(rng);
        double weighted = 0.0;
        for (const auto& pos : positions) weighted += pos.beta * cost_per_unit(pos.lix.value(), t, T, scaling);
        const double basket = cost_per_unit(basket_lix(BasketSpec(positions)).value(), t, T, scaling);
        worst_basket = std::max(worst_basket, rel(weighted, basket));
    }
    v.require(worst_shot < 1e-12, "single_shot = n * sliced, max rel " + fmt("%.2g", worst_shot));
    v.require(worst_unit < 1e-12, "sliced = n P per_unit, max rel " + fmt("%.2g", worst_unit));
    v.require(worst_basket < 1e-12, "sum beta_i per_unit(LIX_i) = per_unit(basket), max rel " + fmt("%.2g", worst_basket));
    return v;
}

Verdict ac6() {
    Verdict v;
    const auto start = Clock::now();
    const auto universe = sim::default_universe();
    const auto result = sim::lixi_vs_lix_study(universe, 20, 7);
    const double elapsed = seconds_since(start);
    double lo = result.points.front().mean_lix, hi = lo;
    for (const auto& p : result.points) {
        lo = std::min(lo, p.mean_lix);
        hi = std::max(hi, p.mean_lix);
    }
    v.require(result.report.r_squared >= 0.9, "R^2 = " + fmt("%.4f", result.report.r_squared) + " >= 0.90");
    v.require(result.report.slope >= 0.9 && result.report.slope <= 1.1,
              "slope = " + fmt("%.4f", result.report.slope) + " in [0.9, 1.1] (intercept " +
                  fmt("%.4f", result.report.intercept) + ")");
    v.require(lo <= 5.25 && hi >= 9.75,
              "generated LIX spans " + fmt("%.3f", lo) + " .. " + fmt("%.3f", hi) + " (needs <= 5.25 and >= 9.75)");
    v.require(result.report.n_points == 50, "instruments used = " + std::to_string(result.report.n_points));
    v.require(elapsed < 120.0, "runtime " + fmt("%.2f", elapsed) + " s < 120 s");
    return v;
}

Verdict ac7() {
    Verdict v;
    const std::vector<DailyBar> flat{
        DailyBar{"P", day(0), 100, 101, 99, 100, 1e6},
        DailyBar{"P", day(1), 100, 115, 85, 100, 3e6},
    };
    const auto terms = amihud_terms(MultiDayWindow(flat));
    const double lix = lix_daily(flat[1]).value();
    v.require(terms.size() == 1 && terms[0].value == 0.0, "flat-close volatile day Amihud term = 0");
    v.require(std::isfinite(lix), "same day lix_daily = " + fmt("%.6f", lix) + " is finite");

    std::vector<DailyBar> window;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        const double low = 40 + 5 * u(rng);
        const double high = low + 0.5 + 2 * u(rng);
        window.push_back(DailyBar{"P", day(i), low + 0.5 * (high - low), high, low, low + (high - low) * u(rng),
                                  1e6 * (1 + u(rng))});
    }
    const double shares = 5e8;
    const double before = hui_heubel(MultiDayWindow(window, shares));
    double worst = 0.0;
    for (double n : {2.0, 3.0, 7.0, 10.0}) {
        auto split = window;
        for (auto& bar : split) {
            bar.open /= n;
            bar.high /= n;
            bar.low /= n;
            bar.close /= n;
            bar.volume *= n;
        }
        const double after = hui_heubel(MultiDayWindow(split, shares));
        worst = std::max(worst, std::fabs(after / before - 1.0 / n));
    }
    v.require(worst < 1e-9, "n-for-1 split with unchanged share count: max |L_after/L_before - 1/n| = " +
                                fmt("%.3g", worst));
    return v;
}

Verdict ac8() {
    Verdict v;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_lix = 0.0, worst_book = 0.0, worst_hh = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double k = std::pow(10.0, 8 * u(rng) - 4);
        const double low = std::pow(10.0, 4 * u(rng) - 1);
        const double high = low * (1 + std::pow(10.0, -3 + 2.3 * u(rng)));
        const double close = low + (high - low) * u(rng);
        const double vol = std::pow(10.0, 2 + 7 * u(rng));
        const double a = lix_daily(DailyBar{"C", day(0), low, high, low, close, vol}).value();
        const double b = lix_daily(DailyBar{"C", day(0), low * k, high * k, low * k, close * k, vol}).value();
        worst_lix = std::max(worst_lix, std::fabs(a - b));

        const std::uint64_t seed = rng();
        std::mt19937_64 r1(seed), r2(seed);
        worst_book = std::max(worst_book, std::fabs(lixi_tau(random_book(r1)).value() - lixi_tau(random_book(r2, k)).value()));

        std::vector<DailyBar> bars, scaled;
        for (int d = 0; d < 5; ++d) {
            const double lo = std::pow(10.0, 3 * u(rng));
            const double hi = lo * (1 + 0.05 * u(rng) + 1e-4);
            const double cl = lo + (hi - lo) * u(rng);
            const double vv = std::pow(10.0, 3 + 4 * u(rng));
            bars.push_back(DailyBar{"C", day(d), lo, hi, lo, cl, vv});
            scaled.push_back(DailyBar{"C", day(d), lo * k, hi * k, lo * k, cl * k, vv});
        }
        const double h1 = hui_heubel(MultiDayWindow(bars, 1e8));
        const double h2 = hui_heubel(MultiDayWindow(scaled, 1e8));
        worst_hh = std::max(worst_hh, std::fabs(h1 - h2) / std::max(1.0, std::fabs(h1)));
    }
    v.require(worst_lix < 1e-12, "currency rescaling: lix_daily max diff " + fmt("%.2g", worst_lix));
    v.require(worst_book < 1e-12, "lixi_tau max diff " + fmt("%.2g", worst_book));
    v.require(worst_hh < 1e-12, "hui_heubel max diff " + fmt("%.2g", worst_hh));

    int bound_fail = 0, perm_fail = 0, merge_fail = 0, etf_fail = 0;
    for (int i = 0; i < 5000; ++i) {
        auto positions = random_positions(rng);
        const double b = basket_lix(BasketSpec(positions)).value();
        double lo = 1e300, hi = -1e300;
        for (const auto& p : positions) {
            lo = std::min(lo, p.lix.value());
            hi = std::max(hi, p.lix.value());
        }
        bound_fail += !(b >= lo - 1e-12 && b <= hi + 1e-12);
        auto shuffled = positions;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        perm_fail += !(std::fabs(basket_lix(BasketSpec(shuffled)).value() - b) < 1e-12);
        auto merged = positions;
        const std::size_t idx = rng() % merged.size();
        merged[idx].beta /= 2;
        merged.push_back(merged[idx]);
        merge_fail += !(std::fabs(basket_lix(BasketSpec(merged)).value() - b) < 1e-12);
        const double etf = 12 * u(rng);
        const double combined =
            basket_with_etf_lix(BasketSpec(positions, LiquidityIndex(etf, IndexKind::Daily))).value();
        etf_fail += !(combined > std::max(b, etf));
    }
    v.require(bound_fail == 0, "min <= basket <= max failures " + std::to_string(bound_fail) + "/5000");
    v.require(perm_fail == 0, "permutation failures " + std::to_string(perm_fail));
    v.require(merge_fail == 0, "merge failures " + std::to_string(merge_fail));
    v.require(etf_fail == 0, "ETF >= max(legs) failures " + std::to_string(etf_fail));
    return v;
}

// ---------------------------------------------------------------------------
// I/O fuzzing: every case carries at least one defect by construction.

struct Fuzzer {
    std::mt19937_64 rng{9};

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
    template <typename T>
    const T& one_of(const std::vector<T>& items) {
        return items[pick(items.size())];
    }

    std::vector<std::vector<std::string>> bars_rows() {
        std::vector<std::vector<std::string>> rows{{"date", "open", "high", "low", "close", "volume"}};
        const std::size_t n = 1 + pick(8);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back({to_string(day(static_cast<int>(i))), "50", "51", "49.5", "50.5", std::to_string(1000 + i)});
        }
        return rows;
    }

    std::vector<std::vector<std::string>> book_rows() {
        std::vector<std::vector<std::string>> rows{{"timestamp", "side", "level", "price", "volume"}};
        const std::size_t snaps = 1 + pick(3);
        for (std::size_t s = 0; s < snaps; ++s) {
            const std::string t = std::to_string(60 * (s + 1));
            const std::size_t levels = 2 + pick(3);
            for (std::size_t l = 1; l <= levels; ++l) {
                rows.push_back({t, "B", std::to_string(l), std::to_string(100 - static_cast<int>(l)), "10"});
                rows.push_back({t, "A", std::to_string(l), std::to_string(100 + static_cast<int>(l)), "10"});
            }
        }
        return rows;
    }

    std::vector<std::vector<std::string>> position_rows() {
        std::vector<std::vector<std::string>> rows{{"instrument", "beta", "lix"}};
        const std::size_t n = 1 + pick(5);
        for (std::size_t i = 0; i < n; ++i) rows.push_back({"I" + std::to_string(i), "0.2", "7"});
        return rows;
    }

    static std::string join(const std::vector<std::vector<std::string>>& rows, const std::string& eol) {
        std::string out;
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += eol;
        }
        return out;
    }

    std::string bad_number() {
        return one_of<std::string>({"", "abc", "nan", "NaN", "inf", "-inf", "1e400", "1.2.3", "0x1p3", "--5",
                                    "5 5", "\x01", "\xff\xfe", "1,5", "1e", "+"});
    }

    std::string bad_date() {
        return one_of<std::string>({"", "2013-13-01", "2013-02-30", "13-01-01", "2013/01/01", "2013-1-1",
                                    "yesterday", "2013-01-01T00:00", "nan"});
    }

    // Returns the CSV text and which file kind it is (0 bars, 1 book, 2 positions).
    std::pair<std::string, int> make_case() {
        const int kind = static_cast<int>(pick(3));
        auto rows = kind == 0 ? bars_rows() : kind == 1 ? book_rows() : position_rows();
        const std::size_t width = rows[0].size();
        const std::size_t r = 1 + pick(rows.size() - 1);
        const int defect = static_cast<int>(pick(10));
        std::string raw_suffix;
        switch (defect) {
            case 0:  // corrupt header
                rows[0][pick(width)] = one_of<std::string>({"", "foo", "dat e", "\"", "Volume2"});
                if (rows[0][0] == "\"") rows[0][0] = "x\"y";
                break;
            case 1:  // missing field
                rows[r].pop_back();
                break;
            case 2:  // extra field
                rows[r].push_back(one_of<std::string>({"", "1", "x"}));
                break;
            case 3:  // unterminated quote
                rows[r][pick(width)] = "\"" + rows[r][pick(width)];
                break;
            case 4:  // stray quote inside a field
                rows[r][pick(width)] += "\"x";
                break;
            case 5:  // unparseable number
                rows[r][1 + pick(width - 1)] = bad_number();
                if (kind == 1 && rows[r][1] == "") rows[r][1] = "Z";
                break;
            default:
                break;
        }
        if (defect >= 6) {
            if (kind == 0) {
                switch (defect) {
                    case 6: rows[r][0] = bad_date(); break;
                    case 7: rows[r][2] = "10"; rows[r][3] = "20"; break;                // high < low
                    case 8: rows[r][5] = one_of<std::string>({"-1", "-0.5"}); break;   // negative volume
                    default: rows.push_back(rows[r]); break;                            // duplicate date
                }
            } else if (kind == 1) {
                switch (defect) {
                    case 6: rows[r][1] = one_of<std::string>({"C", "b", "", "BID", "AB"}); break;
                    case 7: rows[r][2] = one_of<std::string>({"0", "-1", "1.5", "x", "1e9"}); break;
                    case 8: {  // price or volume non-positive / crossing
                        const int sub = static_cast<int>(pick(3));
                        if (sub == 0) rows[r][3] = one_of<std::string>({"0", "-100"});
                        else if (sub == 1) rows[r][4] = one_of<std::string>({"0", "-10"});
                        else {
                            for (auto& row : rows) {
                                if (row[0] == rows[r][0] && row[1] == "B" && row[2] == "1") row[3] = "150";
                            }
                        }
                        break;
                    }
                    default: {  // gap: drop a level-1 row or duplicate a level
                        if (pick(2) == 0) {
                            rows.push_back(rows[r]);
                        } else {
                            for (std::size_t i = 1; i < rows.size(); ++i) {
                                if (rows[i][2] == "1") {
                                    rows.erase(rows.begin() + static_cast<long>(i));
                                    break;
                                }
                            }
                        }
                        break;
                    }
                }
            } else {
                switch (defect) {
                    case 6: rows[r][1] = one_of<std::string>({"0", "-0.2", "nan"}); break;
                    case 7: rows[r][2] = one_of<std::string>({"inf", "", "seven"}); break;
                    default: rows[r][1] = bad_number(); break;
                }
            }
        }
        std::string text = join(rows, one_of<std::string>({"\n", "\r\n"}));
        if (pick(4) == 0) {
            text = "\xEF\xBB\xBF" + text;
        }
        return {text, kind};
    }
};

bool located(const std::string& err, const std::string& path) {
    const auto at = err.find(path);
    return at != std::string::npos && at + path.size() < err.size() && err[at + path.size()] == ':';
}

bool mentions_non_finite(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    return text.find("nan") != std::string::npos || text.find("inf") != std::string::npos;
}

Verdict ac9() {
    Verdict v;
    const auto dir = std::filesystem::temp_directory_path() / "lix_acceptance_fuzz";
    std::filesystem::create_directories(dir);
    const auto input = (dir / "input.csv").string();
    const auto adv = (dir / "adv.csv").string();
    std::ofstream(adv) << "date,open,high,low,close,volume\n2013-03-01,1,2,1,1,1000\n";

    Fuzzer fuzz;
    int wrong_exit = 0, unlocated = 0, leaked = 0;
    std::string first_problem;
    for (int i = 0; i < 10000; ++i) {
        const auto [text, kind] = fuzz.make_case();
        std::ofstream(input, std::ios::binary | std::ios::trunc) << text;
        std::vector<std::string> args;
        if (kind == 0) {
            args = fuzz.pick(2) == 0 ? std::vector<std::string>{"lix", input, "--all"}
                                     : std::vector<std::string>{"compare", input, "--shares-outstanding", "1e8"};
        } else if (kind == 1) {
            args = {"lixi", input, "--adv-from", adv};
        } else {
            args = {"basket", input};
        }
        if (fuzz.pick(3) == 0) {
            args.insert(args.begin(), {"--format", fuzz.pick(2) ? "json" : "csv"});
        }
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        const bool bad_exit = code != cli::kExitInvalidInput;
        const bool no_location = !located(err.str(), input);
        const bool leaks = mentions_non_finite(out.str());
        wrong_exit += bad_exit;
        unlocated += no_location;
        leaked += leaks;
        if ((bad_exit || no_location || leaks) && first_problem.empty()) {
            first_problem = "case " + std::to_string(i) + " exit " + std::to_string(code) + " err `" + err.str() +
                            "` input `" + text + "`";
        }
    }
    v.require(wrong_exit == 0, "exit 2 on all 10000 malformed inputs (" + std::to_string(wrong_exit) + " misses)");
    v.require(unlocated == 0, "error names file:location (" + std::to_string(unlocated) + " misses)");
    v.require(leaked == 0, "no NaN/inf on stdout (" + std::to_string(leaked) + " leaks)");
    if (!first_problem.empty()) {
        v.detail += "; first problem: " + first_problem;
    }
    return v;
}

struct Criterion {
    const char* title;
    std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"decomposition identity", ac1},   {"basket test cases", ac2},     {"alpha Monte Carlo", ac3},
        {"scaling consistency", ac4},      {"cost algebra", ac5},           {"LIXI vs LIX study", ac6},
        {"classical-measure pathologies", ac7}, {"invariance suite", ac8}, {"I/O robustness", ac9},
    };
    return all;
}

bool report(std::size_t index) {
    const auto& c = criteria()[index];
    Verdict verdict;
    try {
        verdict = c.run();
    } catch (const std::exception& e) {
        verdict.pass = false;
        verdict.detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("AC%zu %s  %s: %s\n", index + 1, verdict.pass ? "PASS" : "FAIL", c.title, verdict.detail.c_str());
    std::fflush(stdout);
    return verdict.pass;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const int n = std::atoi(argv[2]);
        if (n < 1 || n > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "unknown criterion %s\n", argv[2]);
            return 2;
        }
        return report(static_cast<std::size_t>(n - 1)) ? 0 : 1;
    }
    if (argc != 1) {
        std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        all = report(i) && all;
    }
    return all ? 0 : 1;
}
