#pragma once

#include <cstdint>

#include "fibwalk/report.hpp"

namespace fibwalk {

// Desk-scale defaults; run_battery rejects configs outside the envelope
// with std::invalid_argument (a usage error at the CLI boundary).
struct BatteryConfig {
    unsigned lemma3_max = 300;       // grid over 1 <= m,k <= lemma3_max
    unsigned lemma4_max = 300;       // grid over 2 <= k <= m <= lemma4_max
    unsigned lemma4_algebraic_max = 100;
    unsigned eq5_max = 300;
    unsigned eq6_max = 300;
    unsigned binet_max = 500;
    unsigned theorem1_index_cutoff = 480;
    unsigned lemma7_max_n = 3;
    unsigned corollary8_max_n = 3;
    unsigned theorem2_max_n = 4;
    unsigned threads = 0;            // 0: hardware concurrency (FIBWALK_THREADS overrides)
    bool inject_fault = false;       // self-test mode: corrupt a table copy, expect a fail
};

// Largest grids the battery accepts; keeps runtime in seconds.
struct BatteryEnvelope {
    static constexpr unsigned max_grid = 1000;
    static constexpr unsigned max_binet = 2000;
    static constexpr unsigned max_theorem1_cutoff = 1500;
    static constexpr unsigned max_small_n = 4;
    static constexpr unsigned max_theorem2_n = 6;
};

void validate_config(const BatteryConfig& config);

// Registered check names, in report order, for the given config.
std::vector<std::string> battery_check_names(const BatteryConfig& config = {});

// Runs every registered check (or just the named one when `only` is
// non-empty; unknown names raise std::invalid_argument). Report order
// follows the registry, not completion order; independent checks run on a
// small thread pool.
VerificationReport run_battery(const BatteryConfig& config = {}, const std::string& only = "");

}  // namespace fibwalk
