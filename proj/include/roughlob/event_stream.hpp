#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughlob/linalg.hpp"

namespace roughlob {

// Timestamped, component-labeled events of one simulated path. Times are
// strictly increasing in [0, horizon]; components index the 4 order types
// (or are all 0 for the one-dimensional reduction).
struct EventStream {
    std::vector<double> times;
    std::vector<int> components;
    double horizon = 0.0;
    int dim = 4;
    double a = 1.0; // kernel multiplier the stream was simulated with
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t params_fingerprint = 0;

    // optional diagnostic trace of lambda(t) on a uniform grid
    double trace_dt = 0.0;
    std::vector<Vec4> intensity_trace;

    std::size_t size() const { return times.size(); }
};

// NDJSON export: one header record with parameters, then {"t":..,"c":..}
// per event. Import accepts the same format.
void write_event_stream(const EventStream& es, const std::string& path);
EventStream read_event_stream(const std::string& path);

} // namespace roughlob
