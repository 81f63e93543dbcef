#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include "phistar/intarith.hpp"

#include <numeric>

namespace phistar::oracle {

inline bool is_prime_by_trial(u64 x) {
    if (x < 2) return false;
    for (u64 d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline u64 totient_by_scan(u64 n) {
    u64 count = 0;
    for (u64 a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

inline std::vector<u64> divisors_by_scan(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline bool is_prime_power_by_trial(u64 x) {
    if (x < 2) return false;
    u64 p = 2;
    while (x % p) ++p;
    while (x % p == 0) x /= p;
    return x == 1;
}

/// Prime powers 2..limit in ascending order.
inline std::vector<u64> prime_powers_upto(u64 limit) {
    std::vector<u64> out;
    for (u64 x = 2; x <= limit; ++x)
        if (is_prime_power_by_trial(x)) out.push_back(x);
    return out;
}

}  // namespace phistar::oracle
