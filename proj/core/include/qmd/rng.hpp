#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace qmd {

// Deterministic RNG wrapper. Distribution shaping is done by hand so that
// streams are bit-identical regardless of standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint32_t next_u32() { return eng_(); }

    // Uniform in [0,1).
    double uniform() {
        return static_cast<double>(eng_()) * (1.0 / 4294967296.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform() * (static_cast<double>(hi) - lo + 1.0));
    }

    // Box-Muller, standard normal.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 1e-300);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    std::mt19937 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qmd
