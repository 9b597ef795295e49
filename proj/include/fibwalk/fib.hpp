#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibwalk/nat.hpp"

namespace fibwalk {

// F_0..F_top with one entry past the requested bound so interval searches
// can bracket without regenerating.
struct FibTable {
    std::vector<Nat> values;
    std::uint64_t top = 0;
};

// (F_n, F_{n+1}) by fast doubling.
std::pair<Nat, Nat> fib_pair(std::uint64_t n);

Nat fib(std::uint64_t n);

FibTable fib_table_up_to(const Nat& bound);

// Smallest index i with F_i == x, or nullopt. Monotone index bracketing:
// exponential search then binary search over fast-doubling values.
std::optional<std::uint64_t> is_fibonacci(const Nat& x);

// Smallest index i >= 2 with F_i >= x (same bracketing machinery; F_i is
// strictly increasing for i >= 2).
std::uint64_t first_fib_index_at_least(const Nat& x);

// F_{k+1}*F_m <= F_{m+k} <= F_{k+2}*F_m, exact integers. Requires m,k >= 1.
bool check_lemma3(std::uint64_t m, std::uint64_t k);

// F_{m+k} == (F_{k+2} - F_{k-2})*F_m + (-1)^{k+1}*F_{m-k}. Requires m >= k >= 2;
// throws std::domain_error otherwise.
bool check_lemma4(std::uint64_t m, std::uint64_t k);

// 5F_m <= F_{m+4} <= 8F_m <= F_{m+5} <= 13F_m <= F_{m+6} <= 21F_m. Requires m >= 1.
bool check_eq5(std::uint64_t m);

// F_{m+5} == 11*F_m + F_{m-5}. Requires m > 5; throws std::domain_error otherwise.
bool check_eq6(std::uint64_t m);

}  // namespace fibwalk
