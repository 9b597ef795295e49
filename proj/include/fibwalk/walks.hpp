#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibwalk/nat.hpp"
#include "fibwalk/report.hpp"

namespace fibwalk {

enum class AppendMode { ExactDigits, AtMostDigits };

// Digit-append policy, base 10. ExactDigits: every append uses exactly N
// digits (zero-padding allowed). AtMostDigits: each append uses 1..N digits.
struct AppendRule {
    AppendMode mode = AppendMode::ExactDigits;
    unsigned digit_budget = 1;  // N

    static AppendRule exact(unsigned n) { return {AppendMode::ExactDigits, n}; }
    static AppendRule at_most(unsigned n) { return {AppendMode::AtMostDigits, n}; }
};

struct WalkStep {
    Nat value;                  // a Fibonacci number
    std::string appended_block; // digits used to reach value, "" for the start
    unsigned block_len = 0;
};

struct Walk {
    std::vector<WalkStep> steps;
    bool maximal = false;    // no further append possible
    bool truncated = false;  // depth cap hit before maximality was decided

    // Length counts the starting number.
    std::size_t length() const { return steps.size(); }
};

// All Fibonacci numbers reachable from x in one append under the rule,
// found per block length L by bracketing the interval
// [x*10^L, x*10^L + 10^L - 1], ordered by (L, value). Requires x >= 1
// Fibonacci; throws std::domain_error otherwise.
std::vector<WalkStep> successors(const Nat& x, AppendRule rule);

// All maximal walks from start, depth-capped at max_len, deterministic order.
std::vector<Walk> enumerate_walks(const Nat& start, AppendRule rule, unsigned max_len);

// floor(8*(10^N - 1)/7): no Fibonacci above this admits an exact-N append.
Nat appendable_bound(unsigned N);

// digits(x) - 1: the smallest block length not excluded by the digit-count
// rule (appending M digits to a number with >= M+2 digits is impossible).
unsigned min_block_len(const Nat& x);

// Longest-walk bound for budget N and start digit count N0, by the integer
// recursion 2^(M-1)*(N0-1) <= N. Degenerate when N0 >= 2 and N < N0-1.
struct TheoremBound {
    unsigned digit_budget = 0;   // N
    unsigned start_digits = 0;   // N0
    unsigned bound = 0;          // max walk length, meaningful iff !degenerate
    bool degenerate = false;     // no legal first append; longest walk is 1
};

TheoremBound theorem2_bound(unsigned N, unsigned N0);

// Verification fragments. A violated assertion yields status Fail with a
// witness; positive findings are recorded as witnesses too.
CheckResult verify_lemma7(unsigned N, const Nat& scan_cutoff);
CheckResult verify_corollary8(unsigned N);
CheckResult verify_theorem1(std::uint64_t index_cutoff);
CheckResult verify_theorem2(unsigned N);

}  // namespace fibwalk
