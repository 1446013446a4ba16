#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lix/measures.hpp"
#include "lix/orderbook.hpp"
#include "lix/portfolio.hpp"

namespace lix::io {

inline constexpr int kDefaultAdvWindow = 20;
inline constexpr double kDefaultSessionLength = 23400.0;  // 6.5 h

/// One CSV record plus the physical line it started on (1-based).
struct CsvRecord {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// RFC-4180 reader: quoted fields, doubled quotes, CRLF or LF line endings,
/// embedded newlines inside quotes. Blank lines are skipped. Throws ParseError
/// with `source:line` for an unterminated quote or stray quote character.
std::vector<CsvRecord> read_csv(std::istream& in, std::string_view source);

/// Strict numeric field parser; rejects empty, partial, and non-finite input.
double parse_number(std::string_view text, std::string_view where);
Date parse_date(std::string_view text, std::string_view where);

/// `date,open,high,low,close,volume`. Bars come back sorted by date; duplicate
/// dates, malformed fields and OHLC inconsistencies throw with the line number.
std::vector<DailyBar> parse_daily_bars(std::istream& in, std::string_view source, const std::string& instrument_id = {});
std::vector<DailyBar> parse_daily_bars(const std::filesystem::path& path, const std::string& instrument_id = {});

/// Writes bars in the format parse_daily_bars reads, with round-trip precision.
void write_daily_bars(std::ostream& out, std::span<const DailyBar> bars);

/// `timestamp,side,level,price,volume`, side B or A, levels 1..N contiguous
/// per timestamp and side. Snapshots come back ordered by timestamp.
std::vector<OrderBookSnapshot> parse_book_snapshots(std::istream& in, std::string_view source);
std::vector<OrderBookSnapshot> parse_book_snapshots(const std::filesystem::path& path);

void write_book_snapshots(std::ostream& out, std::span<const OrderBookSnapshot> books);

/// `instrument,beta,lix`.
std::vector<BasketPosition> parse_positions(std::istream& in, std::string_view source);
std::vector<BasketPosition> parse_positions(const std::filesystem::path& path);

/// Mean volume of the trailing `window_days` bars, zero-volume days skipped.
AdvContext compute_adv(std::span<const DailyBar> bars, int window_days = kDefaultAdvWindow,
                       double session_length = kDefaultSessionLength);

/// JSON description of one instrument's data files.
struct DatasetManifest {
    std::string instrument_id;
    std::filesystem::path bar_file;
    std::optional<std::filesystem::path> snapshot_file;
    double session_length = kDefaultSessionLength;
    std::string currency;
};

/// Reads `{"instrument_id", "bar_file", "snapshot_file"?, "session_length", "currency"?}`.
/// Relative file paths resolve against the manifest's directory; every
/// referenced file must exist and parse.
DatasetManifest load_manifest(const std::filesystem::path& path);

}  // namespace lix::io
