#pragma once

#include <cstdint>
#include <ostream>

#include "fibwalk/nat.hpp"

namespace fibwalk {

// Element a + b*phi of the golden-ratio ring Z[phi], phi^2 = phi + 1.
// sqrt(5) = 2*phi - 1; phi is a unit with phi^-1 = phi - 1.
struct ZPhi {
    Int a;
    Int b;

    ZPhi() : a(0), b(0) {}
    ZPhi(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    static ZPhi phi() { return {0, 1}; }
    static ZPhi sqrt5() { return {-1, 2}; }
    static ZPhi one() { return {1, 0}; }

    // Galois conjugate: phi -> 1 - phi, so a + b*phi -> (a+b) - b*phi.
    ZPhi conj() const { return {a + b, -b}; }

    // Field norm x * conj(x) = a^2 + a*b - b^2.
    Int norm() const { return a * a + a * b - b * b; }

    bool is_unit() const {
        Int n = norm();
        return n == 1 || n == -1;
    }

    friend ZPhi operator+(const ZPhi& x, const ZPhi& y) { return {x.a + y.a, x.b + y.b}; }
    friend ZPhi operator-(const ZPhi& x, const ZPhi& y) { return {x.a - y.a, x.b - y.b}; }
    friend ZPhi operator-(const ZPhi& x) { return {-x.a, -x.b}; }
    friend bool operator==(const ZPhi& x, const ZPhi& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const ZPhi& x, const ZPhi& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const ZPhi& z) {
        return os << "(" << z.a << "," << z.b << ")";
    }
};

ZPhi zphi_mul(const ZPhi& x, const ZPhi& y);

// Inverse of a unit; throws std::domain_error for non-units.
ZPhi zphi_inverse(const ZPhi& x);

// e-th power; negative e requires a unit base (std::domain_error otherwise).
ZPhi zphi_pow(const ZPhi& x, std::int64_t e);

// phi^4 - 1 == sqrt(5) * phi^2, both sides (1,3).
bool verify_eq3();

// (phi^n - (-phi)^-n) / sqrt(5), exact in the ring; equals fib(n).
// Throws std::logic_error if the quotient is not a rational integer.
Nat binet_exact(std::uint64_t n);

// Re-derives the F_{m+k} identity through the ring (Binet numerators),
// never through integer Fibonacci values. Requires m >= k >= 2.
bool verify_lemma4_algebraic(std::uint64_t m, std::uint64_t k);

}  // namespace fibwalk
