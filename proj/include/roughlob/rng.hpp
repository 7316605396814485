#pragma once

#include <cmath>
#include <cstdint>

namespace roughlob {

// Philox 4x32-10 counter-based generator. A draw is a pure function of
// (key, counter), so streams can be split freely: Monte Carlo path i uses
// stream derive_stream(stage, i) and the results do not depend on the order
// in which paths run.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint64_t next_u64() {
        if (have_ == 0) {
            block(counter_++);
            have_ = 2;
        }
        --have_;
        const int i = 2 * (1 - have_);
        return static_cast<std::uint64_t>(out_[i]) | (static_cast<std::uint64_t>(out_[i + 1]) << 32);
    }

    // uniform on (0,1), 53 random bits, never exactly 0 or 1
    double uniform01() {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(uniform01()) / rate; }

    // Box-Muller; the pair is consumed across two calls
    double normal() {
        if (have_normal_) {
            have_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_normal_ = r * std::sin(a);
        have_normal_ = true;
        return r * std::cos(a);
    }

  private:
    void block(std::uint64_t n) {
        std::uint32_t c0 = static_cast<std::uint32_t>(n);
        std::uint32_t c1 = static_cast<std::uint32_t>(n >> 32);
        std::uint32_t c2 = stream_lo_, c3 = stream_hi_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = 0xD2511F53ULL * c0;
            const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out_[0] = c0; out_[1] = c1; out_[2] = c2; out_[3] = c3;
    }

    std::uint32_t key0_, key1_, stream_lo_, stream_hi_;
    std::uint64_t counter_ = 0;
    std::uint32_t out_[4]{};
    int have_ = 0;
    double cached_normal_ = 0.0;
    bool have_normal_ = false;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const char* s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001B3ULL;
    return h;
}

// Sub-seed rule used everywhere: the master seed keys the generator and the
// stream id is splitmix64(fnv1a64(stage) ^ replicate). Documented in the README.
inline std::uint64_t derive_stream(const char* stage, std::uint64_t replicate) {
    return splitmix64(fnv1a64(stage) ^ replicate);
}

} // namespace roughlob
