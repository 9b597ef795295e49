#include "fibwalk/modular.hpp"

#include <stdexcept>

#include "fibwalk/fib.hpp"

namespace fibwalk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// (F_n mod m, F_{n+1} mod m)
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m) {
    if (n == 0) return {0, 1 % m};
    auto [a, b] = fib_pair_mod(n >> 1, m);
    std::uint64_t t = (2 * (unsigned __int128)b % m + m - a) % m;
    std::uint64_t c = mulmod(a, t, m);                          // F_{2k}
    std::uint64_t d = (mulmod(a, a, m) + mulmod(b, b, m)) % m;  // F_{2k+1}
    if (n & 1) return {d, (c + d) % m};
    return {c, d};
}

}  // namespace

std::uint64_t fib_mod(std::uint64_t n, std::uint64_t m) {
    if (m == 0) throw std::domain_error("fib_mod: modulus must be positive");
    return fib_pair_mod(n, m).first;
}

PisanoResult pisano_period(std::uint64_t m) {
    if (m == 0) throw std::domain_error("pisano_period: modulus must be positive");
    PisanoResult r;
    r.modulus = m;
    std::uint64_t a = 0, b = 1 % m;
    std::uint64_t bound = m * m + 1;
    for (std::uint64_t i = 0; i < bound; ++i) {
        r.residues.push_back(a);
        std::uint64_t next = (a + b) % m;
        a = b;
        b = next;
        if (a == 0 && b == 1 % m) {
            r.period = i + 1;
            return r;
        }
    }
    throw std::logic_error("pisano_period: no period within pigeonhole bound");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> lemma6_residue_search(std::uint64_t k_lo,
                                                                           std::uint64_t k_hi) {
    if (k_lo < 2 || k_lo > k_hi)
        throw std::domain_error("lemma6_residue_search: require 2 <= k_lo <= k_hi");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(k_hi - k_lo + 1);
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        std::uint64_t r = (fib_mod(k + 2, 10) + 10 - fib_mod(k - 2, 10)) % 10;
        out.emplace_back(k, r);
    }
    return out;
}

bool lemma6_direct_check(unsigned N) {
    if (N < 1) throw std::domain_error("lemma6_direct_check: require N >= 1");
    Nat target = pow10(N);
    Nat cutoff = 22 * target;
    FibTable t = fib_table_up_to(cutoff);
    for (std::uint64_t k = 2; k + 2 <= t.top && t.values[k + 2] <= cutoff; ++k)
        if (t.values[k + 2] - t.values[k - 2] == target) return false;
    return true;
}

}  // namespace fibwalk
