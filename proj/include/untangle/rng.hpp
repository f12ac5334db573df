#pragma once

// Seeded RNG with explicitly-specified derived draws. mt19937_64 output is pinned
// by the standard; the bounded draw and shuffle below avoid the library-defined
// std::uniform_int_distribution so that streams are reproducible across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace untangle {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), unbiased by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }

    bool coin() { return next() & 1; }

    // random rational num/den with num in [-num_mag, num_mag], den in [1, den_mag]
    Rat rational(long long num_mag, long long den_mag) {
        return Rat(Int(range(-num_mag, num_mag)), Int(range(1, den_mag)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = (std::size_t)below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace untangle
