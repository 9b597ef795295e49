#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibwalk/fib.hpp"
#include "fibwalk/modular.hpp"

using namespace fibwalk;

TEST_CASE("fib_mod spot values") {
    CHECK(fib_mod(61, 10) == fib_mod(1, 10));
    CHECK(fib_mod(62, 10) == fib_mod(2, 10));
    CHECK(fib_mod(61, 10) == 1);
    CHECK(fib_mod(0, 7) == 0);
    CHECK_THROWS_AS(fib_mod(5, 0), std::domain_error);
}

TEST_CASE("fib_mod agrees with fib(n) mod m") {
    for (std::uint64_t m = 2; m <= 50; ++m)
        for (std::uint64_t n = 0; n <= 300; ++n)
            CHECK(fib_mod(n, m) == static_cast<std::uint64_t>(fib(n) % m));
}

TEST_CASE("pisano period examples and invariants") {
    auto p10 = pisano_period(10);
    CHECK(p10.period == 60);
    CHECK(pisano_period(1).period == 1);
    CHECK(pisano_period(2).period == 3);

    CHECK(p10.residues.size() == 60);
    CHECK(p10.residues[0] == 0);
    CHECK(p10.residues[1] == 1);
    // least period: (0,1) does not recur earlier
    for (std::uint64_t i = 1; i < p10.period; ++i) {
        bool restart = p10.residues[i] == 0 && p10.residues[(i + 1) % 60] == 1;
        CHECK(!restart);
    }
    CHECK_THROWS_AS(pisano_period(0), std::domain_error);
}

TEST_CASE("periodicity: fib_mod(n + period, m) == fib_mod(n, m)") {
    for (std::uint64_t m = 2; m <= 50; ++m) {
        auto p = pisano_period(m);
        for (std::uint64_t n = 0; n <= 500; ++n) CHECK(fib_mod(n + p.period, m) == fib_mod(n, m));
    }
}

TEST_CASE("difference residues mod 10") {
    auto res = lemma6_residue_search(2, 120);
    CHECK(res.front() == std::pair<std::uint64_t, std::uint64_t>{2, 3});  // F_4 - F_0 = 3
    CHECK(res[3].second == 1);  // k=5: F_7 - F_3 = 11

    // the finite window of the no-power-of-ten argument
    for (const auto& [k, v] : res)
        if (k <= 62) CHECK(v != 0);

    // residues repeat with period 60
    for (const auto& [k, v] : res) {
        if (k + 60 > 120) break;
        CHECK(v == res[k - 2 + 60].second);
    }
    CHECK_THROWS_AS(lemma6_residue_search(1, 10), std::domain_error);
    CHECK_THROWS_AS(lemma6_residue_search(8, 4), std::domain_error);
}

TEST_CASE("direct scan: F_{k+2} - F_{k-2} is never a power of ten") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(lemma6_direct_check(n));
    CHECK_THROWS_AS(lemma6_direct_check(0), std::domain_error);
}
