#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibwalk/nat.hpp"

namespace fibwalk {

struct PisanoResult {
    std::uint64_t modulus = 0;
    std::uint64_t period = 0;
    std::vector<std::uint64_t> residues;  // F_0 .. F_{period-1} mod modulus
};

// F_n mod m by fast doubling with reduction at every step. Requires m >= 1.
std::uint64_t fib_mod(std::uint64_t n, std::uint64_t m);

// Least period of the Fibonacci sequence mod m (first recurrence of the
// state pair (0,1)); scan bounded by m^2 + 1 states.
PisanoResult pisano_period(std::uint64_t m);

// Residues of F_{k+2} - F_{k-2} mod 10 for k in [k_lo, k_hi].
// Requires 2 <= k_lo <= k_hi; throws std::domain_error otherwise.
std::vector<std::pair<std::uint64_t, std::uint64_t>> lemma6_residue_search(std::uint64_t k_lo,
                                                                           std::uint64_t k_hi);

// True iff no k >= 2 with F_{k+2} <= 22*10^N has F_{k+2} - F_{k-2} == 10^N.
// The difference is strictly increasing in k past the crossover, so the
// bounded scan is exhaustive. Requires N >= 1.
bool lemma6_direct_check(unsigned N);

}  // namespace fibwalk
