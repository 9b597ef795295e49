// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Time limits are part of the criteria and enforced here.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fibwalk/fib.hpp"
#include "fibwalk/modular.hpp"
#include "fibwalk/walks.hpp"
#include "fibwalk/zphi.hpp"

using namespace fibwalk;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double limit_ms,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d raised: %s\n", number, e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (limit_ms > 0 && ms > limit_ms) ok = false;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.0f ms%s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                ms, limit_ms > 0 ? (", limit " + std::to_string((int)limit_ms) + " ms").c_str() : "");
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "one-digit appends: exactly the five known length-2 walks up to index 480", 5000, [] {
        auto r = verify_theorem1(480);
        if (r.status != CheckStatus::Pass) return false;
        std::set<std::pair<std::string, std::string>> found;
        for (const auto& w : r.witnesses) {
            const auto& steps = w.at("steps");
            if (steps.size() != 2) return false;
            found.insert({steps[0].at("value").get<std::string>(),
                          steps[1].at("value").get<std::string>()});
        }
        const std::set<std::pair<std::string, std::string>> expected = {
            {"1", "13"}, {"2", "21"}, {"3", "34"}, {"5", "55"}, {"8", "89"}};
        return found == expected;
    });

    criterion(2, "difference residues: nonzero on [2,62], 60-periodic, no power of ten", 1000, [] {
        auto res = lemma6_residue_search(2, 120);
        for (const auto& [k, v] : res)
            if (k <= 62 && v == 0) return false;
        for (const auto& [k, v] : res) {
            if (k + 60 > 120) break;
            if (v != res[k - 2 + 60].second) return false;
        }
        for (unsigned n = 1; n <= 8; ++n)
            if (!lemma6_direct_check(n)) return false;
        return true;
    });

    criterion(3, "pisano period of 10 is 60", 0, [] { return pisano_period(10).period == 60; });

    criterion(4, "exact-N appendability bound and max two appends, N in {1,2,3}", 10000, [] {
        const Nat bounds[] = {10, 113, 1141};
        for (unsigned n = 1; n <= 3; ++n) {
            if (appendable_bound(n) != bounds[n - 1]) return false;
            auto l7 = verify_lemma7(n, pow10(n + 3));
            if (l7.status != CheckStatus::Pass) return false;
            for (const auto& w : l7.witnesses)
                if (Nat(w.at("appendable").get<std::string>()) > bounds[n - 1]) return false;
            if (verify_corollary8(n).status != CheckStatus::Pass) return false;
        }
        return true;
    });

    criterion(5, "at-most-N walk lengths within the integer-recursion bound, N in {1..4}", 30000, [] {
        for (unsigned n = 1; n <= 4; ++n) {
            auto r = verify_theorem2(n);
            if (r.status != CheckStatus::Pass) return false;
            for (const auto& w : r.witnesses) {
                if (!w.contains("n0")) continue;
                unsigned n0 = w.at("n0").get<unsigned>();
                if (n0 > n + 1) continue;
                auto b = theorem2_bound(n, n0);
                std::size_t limit = b.degenerate ? 1 : b.bound;
                if (w.at("observed_max").get<std::size_t>() > limit) return false;
            }
        }
        return true;
    });

    criterion(6, "identity suites: product bounds, index-shift, chain, closed form", 0, [] {
        for (std::uint64_t m = 1; m <= 300; ++m)
            for (std::uint64_t k = 1; k <= 300; ++k)
                if (!check_lemma3(m, k)) return false;
        for (std::uint64_t m = 2; m <= 300; ++m)
            for (std::uint64_t k = 2; k <= m; ++k)
                if (!check_lemma4(m, k)) return false;
        for (std::uint64_t m = 1; m <= 300; ++m)
            if (!check_eq5(m)) return false;
        for (std::uint64_t m = 6; m <= 300; ++m)
            if (!check_eq6(m)) return false;
        for (std::uint64_t n = 0; n <= 500; ++n)
            if (binet_exact(n) != fib(n)) return false;
        return verify_eq3();
    });

    criterion(7, "oracle equivalence: membership to 10^6, successors vs brute force", 0, [] {
        const Nat limit = 1000000;
        auto table = fib_table_up_to(limit);
        std::size_t next = 0;
        for (Nat x = 0; x <= limit; ++x) {
            while (table.values[next] < x) ++next;
            bool member = table.values[next] == x;
            if (is_fibonacci(x).has_value() != member) return false;
        }

        // interval-bracketed successors vs trying every digit block
        std::set<Nat> members;
        for (const Nat& v : fib_table_up_to(pow10(8)).values) members.insert(v);
        std::vector<Nat> starts;
        for (const Nat& v : table.values)
            if (v >= 1 && v <= 10000 && (starts.empty() || starts.back() != v)) starts.push_back(v);
        std::mt19937 rng(1123581321);
        std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
        std::uniform_int_distribution<unsigned> pick_len(1, 3);
        for (int trial = 0; trial < 1200; ++trial) {
            Nat x = starts[pick(rng)];
            unsigned len = pick_len(rng);
            std::vector<Nat> brute;
            Nat base = x * pow10(len);
            Nat span = pow10(len);
            for (Nat d = 0; d < span; ++d)
                if (members.count(base + d)) brute.push_back(base + d);
            auto got = successors(x, AppendRule::exact(len));
            if (got.size() != brute.size()) return false;
            for (std::size_t i = 0; i < got.size(); ++i)
                if (got[i].value != brute[i]) return false;
        }
        return true;
    });

    criterion(8, "fault injection makes the battery exit with code 1", 0, [] {
        std::string cmd = std::string(FIBWALK_CLI_PATH) +
                          " verify all --inject-fault --format json --out acceptance_fault.tmp";
        int rc = std::system(cmd.c_str());
        std::remove("acceptance_fault.tmp");
        return WEXITSTATUS(rc) == 1;
    });

    std::printf("%d/8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
