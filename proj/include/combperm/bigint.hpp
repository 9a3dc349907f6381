#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace combperm {

// All counting is exact; signed because some recurrences subtract terms.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

}  // namespace combperm
