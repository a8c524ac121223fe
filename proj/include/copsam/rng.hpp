#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "copsam/array.hpp"

namespace copsam {

// Deterministic RNG. All distribution transforms are written out explicitly so
// results do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t raw() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive integer range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

    // Box-Muller; two uniform draws per call.
    double normal() {
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    Array normal_array(Shape s, double stddev = 1.0) {
        Array a(std::move(s));
        for (auto& v : a.data) v = stddev * normal();
        return a;
    }

    Array uniform_array(Shape s, double lo, double hi) {
        Array a(std::move(s));
        for (auto& v : a.data) v = uniform(lo, hi);
        return a;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace copsam
