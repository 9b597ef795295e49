#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fibwalk {

// Signed arbitrary-precision integer. Nat is the same type; non-negativity
// is a contract of the operations that produce it.
using Int = boost::multiprecision::cpp_int;
using Nat = Int;

inline Nat pow10(unsigned e) {
    Nat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

// Number of decimal digits; num_digits(0) == 1.
inline unsigned num_digits(const Nat& x) {
    if (x == 0) return 1;
    unsigned d = 0;
    for (Nat t = x; t > 0; t /= 10) ++d;
    return d;
}

inline Nat parse_nat(const std::string& s) { return Nat(s); }

}  // namespace fibwalk
