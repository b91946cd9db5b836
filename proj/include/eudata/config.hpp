#pragma once

#include <atomic>
#include <cstdlib>
#include <string>

#include "eudata/errors.hpp"

namespace eudata {

// Process-wide tunables. The CLI sets them once at startup; library calls
// read them as defaults when a parameter is not passed explicitly.
struct Config {
    std::atomic<long long> spair_limit{200000};
    std::atomic<int> trials{3};
    std::atomic<long long> coeff_bound{997};
    std::atomic<int> milnor_cap{64};
};

inline Config& config() {
    static Config cfg;
    static const bool init = [] {
        if (const char* env = std::getenv("EUDATA_SPAIR_LIMIT")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) cfg.spair_limit = v;
        }
        return true;
    }();
    (void)init;
    return cfg;
}

inline void validate_config(int trials, long long coeff_bound, int milnor_cap) {
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
    if (coeff_bound < 2) throw InvalidArgument("coeff-bound must be >= 2");
    if (milnor_cap < 2) throw InvalidArgument("milnor-cap must be >= 2");
}

}  // namespace eudata
