#include "roughlob/csv.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "roughlob/errors.hpp"

namespace roughlob::io {

namespace {

std::FILE* open_w(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
    return f;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    }
    return out;
}

} // namespace

void write_volterra_csv(const std::string& path, const VolterraPath& vp,
                        const std::string& header_comment) {
    std::FILE* f = open_w(path);
    if (!header_comment.empty()) std::fprintf(f, "# %s\n", header_comment.c_str());
    std::fprintf(f, "t,y\n");
    for (std::size_t i = 0; i < vp.times.size(); ++i)
        std::fprintf(f, "%.17g,%.17g\n", vp.times[i], vp.y[i]);
    std::fclose(f);
}

void write_book_csv(const std::string& path, const BookSeries& series) {
    std::FILE* f = open_w(path);
    std::fprintf(f, "t");
    for (double x : series.x) std::fprintf(f, ",%.17g", x);
    std::fprintf(f, "\n");
    for (std::size_t r = 0; r < series.times.size(); ++r) {
        std::fprintf(f, "%.17g", series.times[r]);
        for (double u : series.snapshots[r]) std::fprintf(f, ",%.17g", u);
        std::fprintf(f, "\n");
    }
    std::fclose(f);
}

void write_price_csv(const std::string& path, const PricePath& p) {
    std::FILE* f = open_w(path);
    std::fprintf(f, "t,S,y,D_a,D_b\n");
    for (std::size_t i = 0; i < p.times.size(); ++i)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.times[i], p.s[i], p.y[i],
                     p.depth_a[i], p.depth_b[i]);
    std::fclose(f);
}

void write_depth_warnings_ndjson(const std::string& path, const std::vector<DepthWarning>& w) {
    std::FILE* f = open_w(path);
    for (const auto& rec : w)
        std::fprintf(f, "{\"t\":%.17g,\"D_a\":%.17g,\"D_b\":%.17g,\"event\":\"degenerate_depth\"}\n",
                     rec.t, rec.depth_a, rec.depth_b);
    std::fclose(f);
}

void write_text(const std::string& path, const std::string& text) {
    std::FILE* f = open_w(path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

double parse_timestamp(const std::string& field) {
    if (field.empty()) fail(errc::io_error, "empty timestamp");
    bool digits_only = true;
    for (char ch : field)
        if (!std::isdigit(static_cast<unsigned char>(ch))) { digits_only = false; break; }
    if (digits_only) {
        // epoch nanoseconds
        return std::strtod(field.c_str(), nullptr) * 1e-9;
    }
    int Y, M, D, h, m;
    double sec;
    if (std::sscanf(field.c_str(), "%d-%d-%d%*1[T ]%d:%d:%lf", &Y, &M, &D, &h, &m, &sec) == 6) {
        std::tm tm{};
        tm.tm_year = Y - 1900;
        tm.tm_mon = M - 1;
        tm.tm_mday = D;
        tm.tm_hour = h;
        tm.tm_min = m;
        tm.tm_sec = 0;
        const std::time_t base = timegm(&tm);
        return static_cast<double>(base) + sec;
    }
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str()) fail(errc::io_error, "cannot parse timestamp '" + field + "'");
    return v;
}

TickSeries read_ticks_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    TickSeries out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (first) { first = false; continue; } // header row
        const auto cols = split_csv_line(line);
        if (cols.size() < 2) fail(errc::io_error, "tick row needs 2 columns: " + line);
        out.t.push_back(parse_timestamp(cols[0]));
        out.s.push_back(std::strtod(cols[1].c_str(), nullptr));
    }
    if (out.t.size() < 2) fail(errc::io_error, "tick file has fewer than 2 rows");
    return out;
}

std::vector<DepthRecord> read_depth_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::vector<DepthRecord> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (first) { first = false; continue; }
        const auto cols = split_csv_line(line);
        if (cols.size() < 4) fail(errc::io_error, "depth row needs 4 columns: " + line);
        DepthRecord r;
        r.t = parse_timestamp(cols[0]);
        r.x_offset = std::strtod(cols[1].c_str(), nullptr);
        r.size = std::strtod(cols[2].c_str(), nullptr);
        if (cols[3] == "ask") r.ask = true;
        else if (cols[3] == "bid") r.ask = false;
        else fail(errc::io_error, "side must be 'bid' or 'ask', got " + cols[3]);
        out.push_back(r);
    }
    return out;
}

std::vector<std::pair<double, double>> read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::vector<std::pair<double, double>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split_csv_line(line);
        if (cols.size() < 2) continue;
        char* end = nullptr;
        const double x = std::strtod(cols[0].c_str(), &end);
        if (end == cols[0].c_str()) continue; // header
        out.push_back({x, std::strtod(cols[1].c_str(), nullptr)});
    }
    if (out.size() < 2) fail(errc::io_error, "profile needs at least 2 (x,u) rows");
    return out;
}

void write_summary_ndjson(const std::string& path, const std::vector<SummaryRecord>& records) {
    std::FILE* f = open_w(path);
    for (const auto& r : records)
        std::fprintf(f,
                     "{\"metric\":\"%s\",\"value\":%.17g,\"ci_low\":%.17g,\"ci_high\":%.17g,"
                     "\"n\":%ld}\n",
                     r.metric.c_str(), r.value, r.ci_low, r.ci_high, r.n);
    std::fclose(f);
}

} // namespace roughlob::io
