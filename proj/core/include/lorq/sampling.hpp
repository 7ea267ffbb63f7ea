#pragma once

#include <cstdint>
#include <random>

#include "lorq/rational.hpp"

namespace lorq {

// Deterministic sampler: mt19937_64 raw draws with modulo reduction, so the
// stream is identical across platforms and standard-library implementations.
struct Sampler {
    std::mt19937_64 eng;

    explicit Sampler(std::uint64_t seed) : eng(seed) {}

    long uniform(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long max_num = 9, long max_den = 9) {
        Rat r(uniform(-max_num, max_num), uniform(1, max_den));
        r.canonicalize();
        return r;
    }

    Vec vec(int n, long max_num = 9, long max_den = 9) {
        Vec v(static_cast<size_t>(n));
        for (auto& e : v) e = rat(max_num, max_den);
        return v;
    }
};

}  // namespace lorq
