#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencase/errors.hpp"

namespace gencase {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);
    }
    return result;
}

// k + k^2 + ... + k^n (n >= 0; empty sum for n == 0).
inline BigInt geometric_sum_from_one(const BigInt& k, std::uint64_t n) {
    BigInt sum = 0;
    BigInt term = k;
    for (std::uint64_t i = 1; i <= n; ++i) {
        sum += term;
        term *= k;
    }
    return sum;
}

// 1 + k + ... + k^n.
inline BigInt geometric_sum_from_zero(const BigInt& k, std::uint64_t n) {
    return geometric_sum_from_one(k, n) + 1;
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }

// log2 of a nonnegative integer too large for double; -inf for zero.
inline double log2_big(const BigInt& v) {
    if (v < 0) throw ValidationError("log2_big: negative argument");
    if (v == 0) return -std::numeric_limits<double>::infinity();
    const unsigned bits = msb(v);
    if (bits <= 960) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

// Largest integer r with r^k <= v. v >= 0, k >= 1.
inline BigInt iroot(const BigInt& v, std::uint64_t k) {
    if (v < 0) throw ValidationError("iroot: negative radicand");
    if (k == 0) throw ValidationError("iroot: zero degree");
    if (v <= 1 || k == 1) return v;
    BigInt lo = 0;
    BigInt hi = BigInt(1) << static_cast<unsigned>(msb(v) / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline bool is_perfect_power(const BigInt& v, std::uint64_t k, BigInt& root_out) {
    if (v < 0) return false;
    if (v > 1) {
        // powers of two dodge the root search: 2^m is a k-th power iff k | m
        const BigInt below = v - 1;
        const BigInt overlap = v & below;
        if (overlap == 0) {
            const unsigned bit = msb(v);
            if (bit % k != 0) return false;
            root_out = BigInt(1) << static_cast<unsigned>(bit / k);
            return true;
        }
    }
    BigInt r = iroot(v, k);
    if (ipow(r, k) == v) {
        root_out = r;
        return true;
    }
    return false;
}

}  // namespace gencase
