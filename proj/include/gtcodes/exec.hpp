#pragma once

#include <bit>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace gtcodes::exec {

/// Worker count used by parallel scans: an explicit set_max_threads() value
/// wins, then the THREADS environment variable, then the hardware count.
int max_threads();

/// 0 restores the default resolution order above.
void set_max_threads(int k);

/// Counter-based generator (splitmix64). Cheap to construct, so each trial of
/// a randomized search gets its own stream derived from (seed, index) and the
/// outcome is independent of how trials are distributed over workers.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) { }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n) via mask rejection; n >= 1.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1)
            return 0;
        int bits = 64 - std::countl_zero(n - 1);
        for (;;) {
            std::uint64_t v = next() >> (64 - bits);
            if (v < n)
                return v;
        }
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642Full * (index + 1)));
    return g.next();
}

/// Splits [0, total) into one contiguous chunk per worker and runs
/// body(begin, end) on each. Body returns the chunk's first hit (or nullopt);
/// the overall result is the hit from the lowest chunk, which equals the
/// global first hit in scan order no matter how many workers ran.
template <typename R, typename Body>
std::optional<R> first_hit(std::uint64_t total, const Body& body) {
    if (total == 0)
        return std::nullopt;
    std::uint64_t workers = static_cast<std::uint64_t>(max_threads());
    if (workers > total)
        workers = total;
    if (workers <= 1)
        return body(0, total);

    std::vector<std::optional<R>> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
        pool.emplace_back([&, w, lo, hi] {
            try {
                if (lo < hi)
                    results[w] = body(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (auto& r : results)
        if (r)
            return r;
    return std::nullopt;
}

} // namespace gtcodes::exec
