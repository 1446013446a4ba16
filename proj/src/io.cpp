#include "lix/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lix/error.hpp"

namespace lix::io {

namespace {

std::string located(std::string_view source, std::size_t line, std::size_t column = 0) {
    std::string out{source};
    out += ':' + std::to_string(line);
    if (column > 0) {
        out += ":col " + std::to_string(column);
    }
    return out;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

bool same_name(std::string_view field, std::string_view expected) {
    field = trim(field);
    return std::equal(field.begin(), field.end(), expected.begin(), expected.end(), [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
    });
}

void require_header(const std::vector<CsvRecord>& records, std::span<const std::string_view> columns,
                    std::string_view source) {
    std::string expected;
    for (auto c : columns) {
        expected += (expected.empty() ? "" : ",") + std::string(c);
    }
    if (records.empty()) {
        throw Error(ErrorCode::ParseError, located(source, 1), "missing header `" + expected + "`");
    }
    const auto& header = records.front();
    bool ok = header.fields.size() == columns.size();
    for (std::size_t i = 0; ok && i < columns.size(); ++i) {
        ok = same_name(header.fields[i], columns[i]);
    }
    if (!ok) {
        throw Error(ErrorCode::ParseError, located(source, header.line), "expected header `" + expected + "`");
    }
}

void require_width(const CsvRecord& record, std::size_t width, std::string_view source) {
    if (record.fields.size() != width) {
        throw Error(ErrorCode::ParseError, located(source, record.line, std::min(record.fields.size(), width) + 1),
                    "expected " + std::to_string(width) + " fields, found " + std::to_string(record.fields.size()));
    }
}

std::string shortest(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, path.string(), "cannot open file");
    }
    return in;
}

}  // namespace

std::vector<CsvRecord> read_csv(std::istream& in, std::string_view source) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t pos = 0;
    if (text.starts_with("\xEF\xBB\xBF")) {
        pos = 3;
    }

    std::vector<CsvRecord> records;
    CsvRecord current;
    std::string field;
    std::size_t line = 1;
    current.line = line;
    bool quoted = false;       // inside a quoted field
    bool was_quoted = false;   // current field started with a quote
    bool after_quote = false;  // closing quote seen, expecting separator

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
        after_quote = false;
    };
    auto end_record = [&] {
        end_field();
        const bool blank = current.fields.size() == 1 && current.fields.front().empty();
        if (!blank) {
            records.push_back(std::move(current));
        }
        current = CsvRecord{};
        current.line = line;
    };

    while (pos < text.size()) {
        const char c = text[pos++];
        if (quoted) {
            if (c == '"') {
                if (pos < text.size() && text[pos] == '"') {
                    field.push_back('"');
                    ++pos;
                } else {
                    quoted = false;
                    after_quote = true;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.push_back(c);
            }
            continue;
        }
        if (c == ',') {
            end_field();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos < text.size() && text[pos] == '\n') {
                ++pos;
            }
            ++line;
            end_record();
        } else if (after_quote) {
            throw Error(ErrorCode::ParseError, located(source, line, current.fields.size() + 1),
                        "unexpected character after closing quote");
        } else if (c == '"') {
            if (!field.empty() || was_quoted) {
                throw Error(ErrorCode::ParseError, located(source, line, current.fields.size() + 1),
                            "quote inside unquoted field");
            }
            quoted = true;
            was_quoted = true;
        } else {
            field.push_back(c);
        }
    }
    if (quoted) {
        throw Error(ErrorCode::ParseError, located(source, current.line, current.fields.size() + 1),
                    "unterminated quoted field");
    }
    if (!field.empty() || !current.fields.empty() || was_quoted) {
        end_record();
    }
    return records;
}

double parse_number(std::string_view text, std::string_view where) {
    const auto trimmed = trim(text);
    double value = 0.0;
    const auto* first = trimmed.data();
    const auto* last = trimmed.data() + trimmed.size();
    const auto result = std::from_chars(first, last, value);
    if (trimmed.empty() || result.ec != std::errc{} || result.ptr != last) {
        throw Error(ErrorCode::ParseError, std::string(where), "not a number: `" + std::string(text) + "`");
    }
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::ParseError, std::string(where), "non-finite number: `" + std::string(text) + "`");
    }
    return value;
}

Date parse_date(std::string_view text, std::string_view where) {
    const auto t = trim(text);
    const bool shape = t.size() == 10 && t[4] == '-' && t[7] == '-' &&
                       std::all_of(t.begin(), t.end(), [](char c) { return c == '-' || std::isdigit(static_cast<unsigned char>(c)); });
    if (shape) {
        int y = 0;
        unsigned m = 0;
        unsigned d = 0;
        std::from_chars(t.data(), t.data() + 4, y);
        std::from_chars(t.data() + 5, t.data() + 7, m);
        std::from_chars(t.data() + 8, t.data() + 10, d);
        const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
        if (date.ok()) {
            return date;
        }
    }
    throw Error(ErrorCode::ParseError, std::string(where), "not an ISO-8601 date: `" + std::string(text) + "`");
}

std::vector<DailyBar> parse_daily_bars(std::istream& in, std::string_view source, const std::string& instrument_id) {
    static constexpr std::string_view kColumns[] = {"date", "open", "high", "low", "close", "volume"};
    const auto records = read_csv(in, source);
    require_header(records, kColumns, source);

    std::vector<std::pair<DailyBar, std::size_t>> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        require_width(rec, 6, source);
        DailyBar bar;
        bar.instrument_id = instrument_id;
        bar.date = parse_date(rec.fields[0], located(source, rec.line, 1));
        double* targets[] = {&bar.open, &bar.high, &bar.low, &bar.close, &bar.volume};
        for (std::size_t c = 0; c < 5; ++c) {
            *targets[c] = parse_number(rec.fields[c + 1], located(source, rec.line, c + 2));
        }
        try {
            validate(bar);
        } catch (const Error& e) {
            throw Error(ErrorCode::InvariantViolation, located(source, rec.line) + " " + e.where(), e.what());
        }
        rows.emplace_back(std::move(bar), rec.line);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.date < b.first.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first.date == rows[i - 1].first.date) {
            throw Error(ErrorCode::InvariantViolation, located(source, std::max(rows[i].second, rows[i - 1].second)),
                        "duplicate date " + to_string(rows[i].first.date));
        }
    }
    std::vector<DailyBar> bars;
    bars.reserve(rows.size());
    for (auto& row : rows) {
        bars.push_back(std::move(row.first));
    }
    return bars;
}

std::vector<DailyBar> parse_daily_bars(const std::filesystem::path& path, const std::string& instrument_id) {
    auto in = open_input(path);
    return parse_daily_bars(in, path.string(), instrument_id);
}

void write_daily_bars(std::ostream& out, std::span<const DailyBar> bars) {
    out << "date,open,high,low,close,volume\n";
    for (const auto& bar : bars) {
        out << to_string(bar.date) << ',' << shortest(bar.open) << ',' << shortest(bar.high) << ','
            << shortest(bar.low) << ',' << shortest(bar.close) << ',' << shortest(bar.volume) << '\n';
    }
}

std::vector<OrderBookSnapshot> parse_book_snapshots(std::istream& in, std::string_view source) {
    static constexpr std::string_view kColumns[] = {"timestamp", "side", "level", "price", "volume"};
    const auto records = read_csv(in, source);
    require_header(records, kColumns, source);

    struct Pending {
        std::map<long, BookLevel> bids;
        std::map<long, BookLevel> asks;
    };
    std::map<double, Pending> grouped;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        require_width(rec, 5, source);
        const double timestamp = parse_number(rec.fields[0], located(source, rec.line, 1));
        const auto side = trim(rec.fields[1]);
        if (side != "B" && side != "A") {
            throw Error(ErrorCode::ParseError, located(source, rec.line, 2), "side must be B or A");
        }
        const double level_value = parse_number(rec.fields[2], located(source, rec.line, 3));
        if (level_value < 1.0 || level_value > 1e6 || std::floor(level_value) != level_value) {
            throw Error(ErrorCode::ParseError, located(source, rec.line, 3), "level must be a positive integer");
        }
        const BookLevel level{parse_number(rec.fields[3], located(source, rec.line, 4)),
                              parse_number(rec.fields[4], located(source, rec.line, 5))};
        auto& ladder = side == "B" ? grouped[timestamp].bids : grouped[timestamp].asks;
        if (!ladder.emplace(static_cast<long>(level_value), level).second) {
            throw Error(ErrorCode::InvariantViolation, located(source, rec.line, 3), "duplicate level");
        }
    }

    std::vector<OrderBookSnapshot> books;
    books.reserve(grouped.size());
    for (auto& [timestamp, pending] : grouped) {
        const std::string where = std::string(source) + ":t=" + shortest(timestamp);
        auto flatten = [&](const std::map<long, BookLevel>& ladder, const char* side) {
            std::vector<BookLevel> out;
            long expected = 1;
            for (const auto& [level, value] : ladder) {
                if (level != expected) {
                    throw Error(ErrorCode::GapInLevels, where + ":" + side + ":level " + std::to_string(expected),
                                "levels must be contiguous from 1");
                }
                out.push_back(value);
                ++expected;
            }
            return out;
        };
        auto bids = flatten(pending.bids, "B");
        auto asks = flatten(pending.asks, "A");
        try {
            books.emplace_back(timestamp, std::move(bids), std::move(asks));
        } catch (const Error& e) {
            const auto code = e.code() == ErrorCode::CrossedBook ? ErrorCode::CrossedBook : ErrorCode::InvariantViolation;
            throw Error(code, where + " " + e.where(), e.what());
        }
    }
    return books;
}

std::vector<OrderBookSnapshot> parse_book_snapshots(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_book_snapshots(in, path.string());
}

void write_book_snapshots(std::ostream& out, std::span<const OrderBookSnapshot> books) {
    out << "timestamp,side,level,price,volume\n";
    for (const auto& book : books) {
        for (auto [levels, side] : {std::pair{book.bids(), 'B'}, {book.asks(), 'A'}}) {
            for (std::size_t i = 0; i < levels.size(); ++i) {
                out << shortest(book.timestamp()) << ',' << side << ',' << i + 1 << ',' << shortest(levels[i].price)
                    << ',' << shortest(levels[i].volume) << '\n';
            }
        }
    }
}

std::vector<BasketPosition> parse_positions(std::istream& in, std::string_view source) {
    static constexpr std::string_view kColumns[] = {"instrument", "beta", "lix"};
    const auto records = read_csv(in, source);
    require_header(records, kColumns, source);
    std::vector<BasketPosition> positions;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        require_width(rec, 3, source);
        BasketPosition p;
        p.instrument_id = std::string(trim(rec.fields[0]));
        p.beta = parse_number(rec.fields[1], located(source, rec.line, 2));
        p.lix = LiquidityIndex(parse_number(rec.fields[2], located(source, rec.line, 3)), IndexKind::Daily);
        if (!(p.beta > 0.0)) {
            throw Error(ErrorCode::NonPositiveWeight, located(source, rec.line, 2), "weights must be positive");
        }
        positions.push_back(std::move(p));
    }
    return positions;
}

std::vector<BasketPosition> parse_positions(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_positions(in, path.string());
}

AdvContext compute_adv(std::span<const DailyBar> bars, int window_days, double session_length) {
    if (bars.empty()) {
        throw Error(ErrorCode::EmptyDataset, "bars", "no daily bars to average");
    }
    if (window_days < 1) {
        throw Error(ErrorCode::InvalidWindow, "window_days", "window must hold at least one day");
    }
    const auto trailing = bars.last(std::min(bars.size(), static_cast<std::size_t>(window_days)));
    double sum = 0.0;
    std::size_t traded_days = 0;
    for (const auto& bar : trailing) {
        if (bar.volume > 0.0) {
            sum += bar.volume;
            ++traded_days;
        }
    }
    if (traded_days == 0) {
        throw Error(ErrorCode::AllZeroVolume, "bars", "no volume in the trailing window");
    }
    return {sum / static_cast<double>(traded_days), window_days, session_length};
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    auto in = open_input(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string(), e.what());
    }
    const auto base = path.parent_path();
    auto string_field = [&](const char* key, bool required) -> std::optional<std::string> {
        if (!doc.contains(key)) {
            if (required) {
                throw Error(ErrorCode::ParseError, path.string() + ":" + key, "missing field");
            }
            return std::nullopt;
        }
        if (!doc[key].is_string()) {
            throw Error(ErrorCode::ParseError, path.string() + ":" + key, "expected a string");
        }
        return doc[key].get<std::string>();
    };
    auto resolve = [&](const std::string& file) {
        std::filesystem::path p(file);
        return p.is_relative() ? base / p : p;
    };

    DatasetManifest manifest;
    manifest.instrument_id = *string_field("instrument_id", true);
    manifest.bar_file = resolve(*string_field("bar_file", true));
    if (auto snap = string_field("snapshot_file", false)) {
        manifest.snapshot_file = resolve(*snap);
    }
    manifest.currency = string_field("currency", false).value_or("");
    if (doc.contains("session_length")) {
        if (!doc["session_length"].is_number()) {
            throw Error(ErrorCode::ParseError, path.string() + ":session_length", "expected a number");
        }
        manifest.session_length = doc["session_length"].get<double>();
    }
    if (!std::isfinite(manifest.session_length) || !(manifest.session_length > 0.0)) {
        throw Error(ErrorCode::InvariantViolation, path.string() + ":session_length", "must be positive");
    }
    parse_daily_bars(manifest.bar_file, manifest.instrument_id);
    if (manifest.snapshot_file) {
        parse_book_snapshots(*manifest.snapshot_file);
    }
    return manifest;
}

}  // namespace lix::io
