#pragma once

// Number-theoretic primitives over 64-bit and GMP integers.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phistar {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline mpz_class to_mpz(u64 x) {
    static_assert(sizeof(unsigned long) == sizeof(u64), "LP64 target expected");
    return mpz_class{static_cast<unsigned long>(x)};
}

inline bool fits_u64(const mpz_class& x) { return x >= 0 && mpz_fits_ulong_p(x.get_mpz_t()); }

inline u64 to_u64(const mpz_class& x) {
    if (!fits_u64(x)) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    return x.get_ui();
}

namespace detail {

inline void require_positive(u64 n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test to base a; n odd, n > a.
inline bool strong_probable_prime(u64 n, u64 a) {
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool strong_probable_prime(const mpz_class& n, unsigned long a) {
    mpz_class d = n - 1;
    const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    const mpz_class n_minus_1 = n - 1;
    mpz_class x;
    const mpz_class base{a};
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

// The first twelve primes are a deterministic witness set below
// 318665857834031151167461 > 2^64 (Sorenson and Webster).
inline constexpr std::array<u64, 12> deterministic_witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Witnesses used above 2^64. The first thirteen (up to 41) are deterministic
// below 3317044064679887385961981; beyond that this is a fixed-base strong
// pseudoprime test.
inline constexpr std::array<unsigned long, 20> wide_witnesses{2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                              31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

}  // namespace detail

/// Prime factorization of n by trial division, ascending primes.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    detail::require_positive(n, "factorize");
    std::vector<std::pair<u64, unsigned>> out;
    auto strip = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int moebius(u64 n) {
    detail::require_positive(n, "moebius");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline u64 euler_phi(u64 n) {
    detail::require_positive(n, "euler_phi");
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Divisors of n in ascending order.
inline std::vector<u64> divisors(u64 n) {
    detail::require_positive(n, "divisors");
    std::vector<u64> low, high;
    for (u64 d = 1; d <= n / d; ++d) {
        if (n % d) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// Largest prime dividing n; 0 when n == 1.
inline u64 largest_prime_factor(u64 n) {
    if (n <= 1) return 0;
    return factorize(n).back().first;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : detail::deterministic_witnesses) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    for (u64 a : detail::deterministic_witnesses) {
        if (!detail::strong_probable_prime(n, a)) return false;
    }
    return true;
}

/// Below this bound is_prime(mpz_class) is a proof, not a probable answer.
inline const mpz_class& deterministic_prime_limit() {
    static const mpz_class limit("3317044064679887385961981", 10);
    return limit;
}

/// Exact below deterministic_prime_limit() (in particular below 2^64).
/// Above it, a strong pseudoprime test to the twenty prime bases 2..71 after
/// trial division by the primes below 1000: a composite passes only if it is
/// a strong pseudoprime to all twenty bases at once.
inline bool is_prime(const mpz_class& x) {
    if (x < 2) return false;
    if (fits_u64(x)) return is_prime(static_cast<u64>(x.get_ui()));
    for (unsigned long p = 2; p < 1000; ++p) {
        if (is_prime(static_cast<u64>(p)) && mpz_divisible_ui_p(x.get_mpz_t(), p)) return false;
    }
    for (unsigned long a : detail::wide_witnesses) {
        if (!detail::strong_probable_prime(x, a)) return false;
    }
    return true;
}

/// q = p^e with p prime and e >= 1.
class PrimePower {
public:
    PrimePower(mpz_class base, unsigned exponent) : base_(std::move(base)), exponent_(exponent) {
        if (exponent_ == 0) throw std::invalid_argument("PrimePower: exponent must be >= 1");
        if (!is_prime(base_)) throw std::invalid_argument("PrimePower: base " + base_.get_str() + " is not prime");
        mpz_pow_ui(value_.get_mpz_t(), base_.get_mpz_t(), exponent_);
    }

    const mpz_class& value() const { return value_; }
    const mpz_class& base() const { return base_; }
    unsigned exponent() const { return exponent_; }

    friend bool operator==(const PrimePower& a, const PrimePower& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const PrimePower& a, const PrimePower& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpz_class value_;
    mpz_class base_;
    unsigned exponent_;
};

/// Returns (p, e) with p^e == x when x is a prime power; e is maximal.
inline std::optional<PrimePower> prime_power_decompose(const mpz_class& x) {
    if (x <= 1) throw std::invalid_argument("prime_power_decompose: argument must be >= 2");
    const auto max_exp = static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
    mpz_class root;
    for (unsigned e = max_exp; e >= 2; --e) {
        if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), e) && is_prime(root)) return PrimePower(root, e);
    }
    if (is_prime(x)) return PrimePower(x, 1);
    return std::nullopt;
}

inline std::optional<PrimePower> prime_power_decompose(u64 x) { return prime_power_decompose(to_mpz(x)); }

/// Smallest prime power strictly greater than x.
inline PrimePower next_prime_power(const mpz_class& x) {
    if (x < 1) throw std::invalid_argument("next_prime_power: argument must be >= 1");
    for (mpz_class y = x + 1;; ++y) {
        if (auto pp = prime_power_decompose(y)) return *pp;
    }
}

inline PrimePower next_prime_power(u64 x) { return next_prime_power(to_mpz(x)); }

struct TwoAdicSplit {
    mpz_class two_part;
    mpz_class odd_part;
};

inline TwoAdicSplit two_adic_split(const mpz_class& x) {
    if (x <= 0) throw std::invalid_argument("two_adic_split: argument must be >= 1");
    const mp_bitcnt_t v = mpz_scan1(x.get_mpz_t(), 0);
    TwoAdicSplit out;
    mpz_ui_pow_ui(out.two_part.get_mpz_t(), 2, v);
    mpz_fdiv_q_2exp(out.odd_part.get_mpz_t(), x.get_mpz_t(), v);
    return out;
}

inline mpz_class ipow(const mpz_class& base, unsigned long exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace phistar
