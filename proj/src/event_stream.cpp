#include "roughlob/event_stream.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "roughlob/errors.hpp"

namespace roughlob {

void write_event_stream(const EventStream& es, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
    std::fprintf(f,
                 "{\"type\":\"header\",\"dim\":%d,\"horizon\":%.17g,\"a\":%.17g,"
                 "\"seed\":%" PRIu64 ",\"stream\":%" PRIu64 ",\"fingerprint\":%" PRIu64
                 ",\"events\":%zu}\n",
                 es.dim, es.horizon, es.a, es.seed, es.stream, es.params_fingerprint,
                 es.times.size());
    for (std::size_t i = 0; i < es.times.size(); ++i)
        std::fprintf(f, "{\"t\":%.17g,\"c\":%d}\n", es.times[i], es.components[i]);
    std::fclose(f);
}

EventStream read_event_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) fail(errc::io_error, "empty event file " + path);
    nlohmann::json hdr = nlohmann::json::parse(line);
    if (hdr.value("type", "") != "header") fail(errc::io_error, "missing header record");

    EventStream es;
    es.dim = hdr.at("dim").get<int>();
    es.horizon = hdr.at("horizon").get<double>();
    es.a = hdr.at("a").get<double>();
    es.seed = hdr.at("seed").get<std::uint64_t>();
    es.stream = hdr.at("stream").get<std::uint64_t>();
    es.params_fingerprint = hdr.at("fingerprint").get<std::uint64_t>();
    const auto n = hdr.at("events").get<std::size_t>();
    es.times.reserve(n);
    es.components.reserve(n);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        es.times.push_back(j.at("t").get<double>());
        es.components.push_back(j.at("c").get<int>());
    }
    if (es.times.size() != n) fail(errc::io_error, "event count does not match header");
    for (std::size_t i = 0; i + 1 < es.times.size(); ++i)
        if (!(es.times[i] < es.times[i + 1])) fail(errc::io_error, "event times must increase");
    return es;
}

} // namespace roughlob
