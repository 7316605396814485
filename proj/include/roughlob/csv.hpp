#pragma once

#include <string>
#include <utility>
#include <vector>

#include "roughlob/price.hpp"

namespace roughlob::io {

// All writers print doubles with %.17g so artifacts round-trip bit-exactly.

void write_volterra_csv(const std::string& path, const VolterraPath& vp,
                        const std::string& header_comment);
void write_book_csv(const std::string& path, const BookSeries& series);
void write_price_csv(const std::string& path, const PricePath& p);
void write_depth_warnings_ndjson(const std::string& path, const std::vector<DepthWarning>& w);
void write_text(const std::string& path, const std::string& text);

struct TickSeries {
    std::vector<double> t; // seconds
    std::vector<double> s;
};

// CSV with header, columns (timestamp_iso8601 | epoch_ns, price)
TickSeries read_ticks_csv(const std::string& path);

struct DepthRecord {
    double t;
    double x_offset;
    double size;
    bool ask; // side column: "ask" or "bid"
};

// CSV with header, columns (timestamp, x_offset, size, side)
std::vector<DepthRecord> read_depth_csv(const std::string& path);

// (x, u) pairs for initial-profile ingestion
std::vector<std::pair<double, double>> read_profile_csv(const std::string& path);

// digits -> epoch nanoseconds; otherwise ISO 8601 (YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]);
// otherwise plain seconds
double parse_timestamp(const std::string& field);

struct SummaryRecord {
    std::string metric;
    double value;
    double ci_low;
    double ci_high;
    long n;
};

void write_summary_ndjson(const std::string& path, const std::vector<SummaryRecord>& records);

} // namespace roughlob::io
