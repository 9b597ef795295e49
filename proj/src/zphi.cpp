#include "fibwalk/zphi.hpp"

#include <stdexcept>

namespace fibwalk {

ZPhi zphi_mul(const ZPhi& x, const ZPhi& y) {
    // (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1
    Int bb = x.b * y.b;
    return {x.a * y.a + bb, x.a * y.b + x.b * y.a + bb};
}

ZPhi zphi_inverse(const ZPhi& x) {
    Int n = x.norm();
    if (n == 1) return x.conj();
    if (n == -1) return -x.conj();
    throw std::domain_error("zphi_inverse: not a unit");
}

ZPhi zphi_pow(const ZPhi& x, std::int64_t e) {
    ZPhi base = x;
    std::uint64_t exp;
    if (e < 0) {
        base = zphi_inverse(x);
        exp = static_cast<std::uint64_t>(-(e + 1)) + 1;
    } else {
        exp = static_cast<std::uint64_t>(e);
    }
    ZPhi acc = ZPhi::one();
    while (exp > 0) {
        if (exp & 1) acc = zphi_mul(acc, base);
        base = zphi_mul(base, base);
        exp >>= 1;
    }
    return acc;
}

bool verify_eq3() {
    ZPhi lhs = zphi_pow(ZPhi::phi(), 4) - ZPhi::one();
    ZPhi rhs = zphi_mul(ZPhi::sqrt5(), zphi_pow(ZPhi::phi(), 2));
    return lhs == rhs;
}

namespace {

// Binet numerator phi^n - (-phi)^-n.
ZPhi binet_numerator(std::int64_t n) {
    return zphi_pow(ZPhi::phi(), n) - zphi_pow(-ZPhi::phi(), -n);
}

// Exact division by sqrt(5) = -1 + 2 phi: multiply by the conjugate 1 - 2 phi,
// divide by the norm -5, assert zero remainder.
ZPhi div_sqrt5(const ZPhi& x) {
    ZPhi num = zphi_mul(x, ZPhi::sqrt5().conj());
    if (num.a % 5 != 0 || num.b % 5 != 0)
        throw std::logic_error("div_sqrt5: quotient not in Z[phi]");
    return {num.a / -5, num.b / -5};
}

}  // namespace

Nat binet_exact(std::uint64_t n) {
    ZPhi q = div_sqrt5(binet_numerator(static_cast<std::int64_t>(n)));
    if (q.b != 0 || q.a < 0)
        throw std::logic_error("binet_exact: result is not a natural number");
    return q.a;
}

bool verify_lemma4_algebraic(std::uint64_t m, std::uint64_t k) {
    if (k < 2 || m < k) throw std::domain_error("verify_lemma4_algebraic: require m >= k >= 2");
    auto num = [](std::uint64_t n) { return binet_numerator(static_cast<std::int64_t>(n)); };
    // Identity scaled by 5: sqrt5*num(m+k) == (num(k+2)-num(k-2))*num(m)
    //                                          + (-1)^{k+1}*sqrt5*num(m-k)
    ZPhi lhs = zphi_mul(ZPhi::sqrt5(), num(m + k));
    ZPhi tail = zphi_mul(ZPhi::sqrt5(), num(m - k));
    if (k % 2 == 0) tail = -tail;
    ZPhi rhs = zphi_mul(num(k + 2) - num(k - 2), num(m)) + tail;
    return lhs == rhs;
}

}  // namespace fibwalk
