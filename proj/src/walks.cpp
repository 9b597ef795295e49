#include "fibwalk/walks.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "fibwalk/fib.hpp"

namespace fibwalk {

namespace {

std::string zero_padded(const Nat& v, unsigned width) {
    std::string s = v.str();
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

// Fibonacci starts >= 1, deduplicated by value (the value 1 appears once).
std::vector<Nat> fib_starts_up_to(const Nat& bound) {
    std::vector<Nat> out;
    FibTable t = fib_table_up_to(bound);
    for (std::size_t i = 1; i < t.values.size(); ++i) {
        if (t.values[i] > bound) break;
        if (i == 2) continue;  // duplicate of F_1 = 1
        out.push_back(t.values[i]);
    }
    return out;
}

nlohmann::json walk_to_json(const Walk& w) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : w.steps)
        steps.push_back({{"value", s.value.str()},
                         {"block", s.appended_block},
                         {"block_len", s.block_len}});
    return {{"steps", steps}, {"maximal", w.maximal}, {"truncated", w.truncated}};
}

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

}  // namespace

std::vector<WalkStep> successors(const Nat& x, AppendRule rule) {
    if (x < 1 || !is_fibonacci(x))
        throw std::domain_error("successors: input must be a Fibonacci number >= 1");
    if (rule.digit_budget < 1) throw std::domain_error("successors: digit budget must be >= 1");
    std::vector<WalkStep> out;
    unsigned lo_len = rule.mode == AppendMode::ExactDigits ? rule.digit_budget : 1;
    for (unsigned len = lo_len; len <= rule.digit_budget; ++len) {
        Nat shift = pow10(len);
        Nat lo = x * shift;
        Nat hi = lo + shift - 1;
        // Bracket the interval instead of trying all 10^len digit blocks.
        for (std::uint64_t i = first_fib_index_at_least(lo);; ++i) {
            Nat y = fib(i);
            if (y > hi) break;
            out.push_back({y, zero_padded(y - lo, len), len});
        }
    }
    return out;
}

std::vector<Walk> enumerate_walks(const Nat& start, AppendRule rule, unsigned max_len) {
    if (start < 1 || !is_fibonacci(start))
        throw std::domain_error("enumerate_walks: start must be a Fibonacci number >= 1");
    if (max_len < 1) throw std::domain_error("enumerate_walks: max_len must be >= 1");
    std::vector<Walk> out;
    std::vector<WalkStep> path = {{start, "", 0}};
    auto dfs = [&](auto&& self) -> void {
        auto next = successors(path.back().value, rule);
        if (next.empty()) {
            out.push_back({path, true, false});
            return;
        }
        if (path.size() >= max_len) {
            out.push_back({path, false, true});
            return;
        }
        for (const auto& step : next) {
            path.push_back(step);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

Nat appendable_bound(unsigned N) {
    if (N < 1) throw std::domain_error("appendable_bound: require N >= 1");
    return 8 * (pow10(N) - 1) / 7;
}

unsigned min_block_len(const Nat& x) {
    if (x < 1) throw std::domain_error("min_block_len: require x >= 1");
    return num_digits(x) - 1;
}

TheoremBound theorem2_bound(unsigned N, unsigned N0) {
    if (N < 1 || N0 < 1) throw std::domain_error("theorem2_bound: require N >= 1, N0 >= 1");
    TheoremBound r;
    r.digit_budget = N;
    r.start_digits = N0;
    unsigned step = N0 == 1 ? 1 : N0 - 1;  // first append needs >= step digits
    if (step > N) {
        // No legal first append; the walk is the bare start.
        r.degenerate = true;
        r.bound = 1;
        return r;
    }
    // Largest M with 2^(M-1)*step <= N; length is M+1 including the start.
    unsigned m = 1;
    unsigned long long need = step;
    while (need * 2 <= N) {
        need *= 2;
        ++m;
    }
    r.bound = m + 1;
    return r;
}

CheckResult verify_lemma7(unsigned N, const Nat& scan_cutoff) {
    if (N < 1) throw std::domain_error("verify_lemma7: require N >= 1");
    if (scan_cutoff < pow10(N + 2))
        throw std::domain_error("verify_lemma7: scan cutoff below 10^(N+2)");
    Timer timer;
    CheckResult r;
    r.name = "lemma7";
    r.params = {{"n", N}, {"cutoff", scan_cutoff.str()}};
    Nat bound = appendable_bound(N);
    for (const Nat& x : fib_starts_up_to(scan_cutoff)) {
        auto next = successors(x, AppendRule::exact(N));
        if (next.empty()) continue;
        nlohmann::json succ = nlohmann::json::array();
        for (const auto& s : next) succ.push_back(s.value.str());
        r.witnesses.push_back({{"appendable", x.str()}, {"successors", succ}});
        if (x > bound) {
            r.status = CheckStatus::Fail;
            r.witnesses.back()["violation"] = "exceeds appendable bound " + bound.str();
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

CheckResult verify_corollary8(unsigned N) {
    if (N < 1) throw std::domain_error("verify_corollary8: require N >= 1");
    Timer timer;
    CheckResult r;
    r.name = "corollary8";
    r.params = {{"n", N}};
    Nat scan_cutoff = pow10(N + 3);
    unsigned max_appendable_digits = 0;
    std::size_t max_len = 0;
    // (a) every appendable number has at most N+1 digits
    for (const Nat& x : fib_starts_up_to(scan_cutoff)) {
        if (!successors(x, AppendRule::exact(N)).empty())
            max_appendable_digits = std::max(max_appendable_digits, num_digits(x));
    }
    // (b) no walk performs more than two appends
    for (const Nat& start : fib_starts_up_to(pow10(N + 1) - 1)) {
        for (const Walk& w : enumerate_walks(start, AppendRule::exact(N), 8)) {
            if (w.truncated) r.status = CheckStatus::Fail;
            if (w.length() > max_len) max_len = w.length();
            if (w.length() > 3) {
                r.status = CheckStatus::Fail;
                r.witnesses.push_back({{"violation", "walk longer than 3"}, {"walk", walk_to_json(w)}});
            }
        }
    }
    if (max_appendable_digits > N + 1) {
        r.status = CheckStatus::Fail;
        r.witnesses.push_back({{"violation", "appendable number wider than N+1 digits"},
                               {"digits", max_appendable_digits}});
    }
    r.witnesses.push_back(
        {{"max_appendable_digits", max_appendable_digits}, {"max_walk_length", max_len}});
    r.elapsed_ms = timer.ms();
    return r;
}

CheckResult verify_theorem1(std::uint64_t index_cutoff) {
    if (index_cutoff < 30) throw std::domain_error("verify_theorem1: require cutoff >= 30");
    Timer timer;
    CheckResult r;
    r.name = "theorem1";
    r.params = {{"index_cutoff", index_cutoff}};
    const std::set<std::pair<std::string, std::string>> expected = {
        {"1", "13"}, {"2", "21"}, {"3", "34"}, {"5", "55"}, {"8", "89"}};
    std::set<std::pair<std::string, std::string>> found;
    std::set<std::string> seen;  // dedupe start values (1 occurs at two indices)
    for (std::uint64_t m = 1; m <= index_cutoff; ++m) {
        Nat start = fib(m);
        if (!seen.insert(start.str()).second) continue;
        for (const Walk& w : enumerate_walks(start, AppendRule::exact(1), 10)) {
            if (w.length() > 2 || w.truncated) {
                r.status = CheckStatus::Fail;
                r.witnesses.push_back(
                    {{"violation", "walk longer than 2"}, {"walk", walk_to_json(w)}});
            } else if (w.length() == 2) {
                found.insert({w.steps[0].value.str(), w.steps[1].value.str()});
                r.witnesses.push_back(walk_to_json(w));
            }
        }
    }
    if (found != expected) {
        r.status = CheckStatus::Fail;
        r.witnesses.push_back({{"violation", "length-2 walk set differs from the known five"}});
    }
    r.elapsed_ms = timer.ms();
    return r;
}

CheckResult verify_theorem2(unsigned N) {
    if (N < 1 || N > 6) throw std::domain_error("verify_theorem2: require 1 <= N <= 6");
    Timer timer;
    CheckResult r;
    r.name = "theorem2";
    r.params = {{"n", N}};
    // Observed longest walk per start-digit class N0.
    std::vector<std::size_t> observed(N + 3, 0);
    std::vector<nlohmann::json> longest(N + 3);
    for (const Nat& start : fib_starts_up_to(pow10(N + 2) - 1)) {
        unsigned n0 = num_digits(start);
        for (const Walk& w : enumerate_walks(start, AppendRule::at_most(N), 16)) {
            if (w.truncated) r.status = CheckStatus::Fail;
            if (w.length() > observed[n0]) {
                observed[n0] = w.length();
                longest[n0] = walk_to_json(w);
            }
        }
    }
    for (unsigned n0 = 1; n0 <= N + 2; ++n0) {
        TheoremBound b = theorem2_bound(N, n0);
        std::size_t limit = b.degenerate ? 1 : b.bound;
        nlohmann::json entry = {{"n0", n0},
                                {"bound", limit},
                                {"degenerate", b.degenerate},
                                {"observed_max", observed[n0]}};
        if (observed[n0] > 0) entry["longest_walk"] = longest[n0];
        if (observed[n0] > limit) {
            r.status = CheckStatus::Fail;
            entry["violation"] = "observed walk exceeds bound";
        }
        r.witnesses.push_back(entry);
    }
    // Larger starts are barren (no successor under any block length <= N).
    FibTable big = fib_table_up_to(pow10(N + 5));
    for (std::size_t i = big.values.size() - 4; i < big.values.size(); ++i) {
        if (!successors(big.values[i], AppendRule::at_most(N)).empty()) {
            r.status = CheckStatus::Fail;
            r.witnesses.push_back({{"violation", "large start has a successor"},
                                   {"start", big.values[i].str()}});
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

}  // namespace fibwalk
