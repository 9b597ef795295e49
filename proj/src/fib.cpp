#include "fibwalk/fib.hpp"

#include <mutex>
#include <stdexcept>

namespace fibwalk {

std::pair<Nat, Nat> fib_pair(std::uint64_t n) {
    if (n == 0) return {Nat(0), Nat(1)};
    auto [a, b] = fib_pair(n >> 1);  // (F_k, F_{k+1}), k = n/2
    Nat c = a * (2 * b - a);         // F_{2k}
    Nat d = a * a + b * b;           // F_{2k+1}
    if (n & 1)
        return {d, c + d};
    return {c, d};
}

Nat fib(std::uint64_t n) { return fib_pair(n).first; }

namespace {

// Shared cache for the index-bracketing paths; grown monotonically.
std::vector<Nat>& fib_cache() {
    static std::vector<Nat> cache = {Nat(0), Nat(1)};
    return cache;
}
std::mutex cache_mutex;

// F_i through the cache. Values come from the iterative recurrence so the
// cache stays internally consistent.
Nat fib_cached(std::uint64_t i) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& c = fib_cache();
    while (c.size() <= i) c.push_back(c[c.size() - 1] + c[c.size() - 2]);
    return c[i];
}

}  // namespace

FibTable fib_table_up_to(const Nat& bound) {
    FibTable t;
    t.values.push_back(0);
    t.values.push_back(1);
    while (t.values.back() <= bound)
        t.values.push_back(t.values[t.values.size() - 1] + t.values[t.values.size() - 2]);
    t.top = t.values.size() - 1;
    return t;
}

std::uint64_t first_fib_index_at_least(const Nat& x) {
    // F_i strictly increasing for i >= 2.
    std::uint64_t hi = 2;
    while (fib_cached(hi) < x) hi *= 2;
    std::uint64_t lo = 2;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (fib_cached(mid) < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

std::optional<std::uint64_t> is_fibonacci(const Nat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return 0;
    if (x == 1) return 1;  // smallest index for the duplicated value
    std::uint64_t i = first_fib_index_at_least(x);
    if (fib_cached(i) == x) return i;
    return std::nullopt;
}

bool check_lemma3(std::uint64_t m, std::uint64_t k) {
    if (m < 1 || k < 1) throw std::domain_error("check_lemma3: require m >= 1, k >= 1");
    Nat fm = fib(m);
    Nat lhs = fib(k + 1) * fm;
    Nat mid = fib(m + k);
    Nat rhs = fib(k + 2) * fm;
    return lhs <= mid && mid <= rhs;
}

bool check_lemma4(std::uint64_t m, std::uint64_t k) {
    if (k < 2 || m < k) throw std::domain_error("check_lemma4: require m >= k >= 2");
    Int lhs = fib(m + k);
    Int sign = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
    Int rhs = (fib(k + 2) - fib(k - 2)) * fib(m) + sign * fib(m - k);
    return lhs == rhs;
}

bool check_eq5(std::uint64_t m) {
    if (m < 1) throw std::domain_error("check_eq5: require m >= 1");
    Nat fm = fib(m);
    Nat f4 = fib(m + 4), f5 = fib(m + 5), f6 = fib(m + 6);
    return 5 * fm <= f4 && f4 <= 8 * fm && 8 * fm <= f5 && f5 <= 13 * fm && 13 * fm <= f6 &&
           f6 <= 21 * fm;
}

bool check_eq6(std::uint64_t m) {
    if (m <= 5) throw std::domain_error("check_eq6: require m > 5");
    return fib(m + 5) == 11 * fib(m) + fib(m - 5);
}

}  // namespace fibwalk
