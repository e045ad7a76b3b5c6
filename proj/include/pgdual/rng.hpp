#pragma once

#include <cstdint>
#include <vector>

#include "pgdual/errors.hpp"

namespace pgdual {

/// Name echoed in every report so samples can be reproduced elsewhere.
inline constexpr const char* kGeneratorName = "splitmix64";

/// splitmix64 (Steele, Lea, Flood 2014). Fixed constants, pure 64-bit
/// wrapping arithmetic, so the stream is identical on every platform.
/// Bounded draws use plain modulo reduction; the tiny bias is irrelevant
/// here and keeps the reduction portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw usage_error("empty draw range");
        return next() % n;
    }

    int pick(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// k distinct values in [0, n), in draw order, by rejection.
    std::vector<int> distinct(int k, int n) {
        if (k > n) throw usage_error("cannot draw more distinct values than the range holds");
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        while (static_cast<int>(out.size()) < k) {
            int v = pick(n);
            bool seen = false;
            for (int u : out) {
                if (u == v) {
                    seen = true;
                    break;
                }
            }
            if (!seen) out.push_back(v);
        }
        return out;
    }

private:
    std::uint64_t state_;
};

/// Exhaustive search or a seeded sample of a fixed size.
struct SearchMode {
    bool exhaustive = true;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    static SearchMode exhaustive_mode() { return SearchMode{}; }

    static SearchMode sample(std::int64_t n, std::uint64_t seed) {
        SearchMode m;
        m.exhaustive = false;
        m.samples = n;
        m.seed = seed;
        return m;
    }
};

}  // namespace pgdual
