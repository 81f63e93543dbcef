#pragma once

// Exact values of the cyclotomic polynomial Phi_n at integers, and of
// Phi*_n(q), the largest divisor of Phi_n(q) coprime to every q^k - 1 with
// 1 <= k < n.

#include "phistar/intarith.hpp"

#include <memory>
#include <mutex>
#include <string_view>
#include <unordered_map>

namespace phistar {

/// Coefficients in ascending degree order; degree == euler_phi(n).
struct CyclotomicPolynomial {
    u64 n = 0;
    std::vector<mpz_class> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }

    mpz_class evaluate(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

enum class PhiStarBranch { n_equals_1, n_equals_2, r_coprime, r_divides };

constexpr std::string_view to_string(PhiStarBranch b) {
    switch (b) {
        case PhiStarBranch::n_equals_1: return "N_EQUALS_1";
        case PhiStarBranch::n_equals_2: return "N_EQUALS_2";
        case PhiStarBranch::r_coprime: return "R_COPRIME";
        case PhiStarBranch::r_divides: return "R_DIVIDES";
    }
    return "?";
}

struct PhiStarResult {
    u64 n = 0;
    mpz_class q;
    mpz_class phi_n;
    mpz_class phi_star;
    PhiStarBranch branch = PhiStarBranch::n_equals_1;
};

namespace poly {

using Coeffs = std::vector<mpz_class>;

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// X^n - 1
inline Coeffs x_pow_minus_one(u64 n) {
    Coeffs out(n + 1);
    out[0] = -1;
    out[n] = 1;
    return out;
}

/// Quotient and remainder of num / den for monic den.
inline std::pair<Coeffs, Coeffs> divide_monic(Coeffs num, const Coeffs& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("divide_monic: divisor must be monic");
    if (num.size() < den.size()) return {Coeffs{0}, std::move(num)};
    const std::size_t dq = num.size() - den.size();
    Coeffs quot(dq + 1);
    for (std::size_t i = dq + 1; i-- > 0;) {
        const mpz_class lead = num[i + den.size() - 1];
        quot[i] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= lead * den[j];
    }
    num.resize(den.size() - 1);
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    if (num.empty()) num.push_back(0);
    return {std::move(quot), std::move(num)};
}

inline bool is_zero(const Coeffs& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

}  // namespace poly

namespace detail {

struct CoefficientCache {
    std::mutex mutex;
    std::unordered_map<u64, std::shared_ptr<const poly::Coeffs>> table;
};

inline CoefficientCache& coefficient_cache() {
    static CoefficientCache cache;
    return cache;
}

inline std::shared_ptr<const poly::Coeffs> cyclotomic_coeffs_shared(u64 n) {
    auto& cache = coefficient_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
    }
    // X^n - 1 divided by the product over proper divisors.
    poly::Coeffs proper{1};
    for (u64 d : divisors(n)) {
        if (d == n) break;
        proper = poly::multiply(proper, *cyclotomic_coeffs_shared(d));
    }
    auto [quot, rem] = poly::divide_monic(poly::x_pow_minus_one(n), proper);
    if (!poly::is_zero(rem)) throw std::logic_error("cyclotomic_coeffs: inexact division");
    auto value = std::make_shared<const poly::Coeffs>(std::move(quot));
    std::lock_guard lock(cache.mutex);
    return cache.table.emplace(n, std::move(value)).first->second;
}

inline void require_q(const mpz_class& q, const char* what) {
    if (q < 2) throw std::invalid_argument(std::string(what) + ": q must be >= 2");
}

}  // namespace detail

/// Memoized; the cache is shared between threads behind a mutex.
inline CyclotomicPolynomial cyclotomic_coeffs(u64 n) {
    detail::require_positive(n, "cyclotomic_coeffs");
    return {n, *detail::cyclotomic_coeffs_shared(n)};
}

/// Phi_n(q) = prod_{d | n} (q^{n/d} - 1)^{mu(d)}, one exact division.
inline mpz_class cyclotomic_eval(u64 n, const mpz_class& q) {
    detail::require_positive(n, "cyclotomic_eval");
    detail::require_q(q, "cyclotomic_eval");
    mpz_class num = 1, den = 1;
    for (u64 d : divisors(n)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        mpz_class term = ipow(q, n / d) - 1;
        (mu > 0 ? num : den) *= term;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

/// Phi*_n(q) from Phi_n(q): the odd part of q + 1 when n == 2, otherwise
/// Phi_n(q) with at most one factor r removed, r the largest prime dividing n.
inline PhiStarResult phi_star_from(u64 n, const mpz_class& q, mpz_class phi_n) {
    PhiStarResult out{n, q, std::move(phi_n), 0, PhiStarBranch::n_equals_1};
    if (n == 1) {
        out.phi_star = out.phi_n;
    } else if (n == 2) {
        out.branch = PhiStarBranch::n_equals_2;
        out.phi_star = two_adic_split(out.phi_n).odd_part;
    } else {
        const u64 r = largest_prime_factor(n);
        if (mpz_divisible_ui_p(out.phi_n.get_mpz_t(), r)) {
            out.branch = PhiStarBranch::r_divides;
            out.phi_star = out.phi_n / to_mpz(r);
        } else {
            out.branch = PhiStarBranch::r_coprime;
            out.phi_star = out.phi_n;
        }
    }
    return out;
}

inline PhiStarResult phi_star(u64 n, const mpz_class& q) {
    detail::require_positive(n, "phi_star");
    detail::require_q(q, "phi_star");
    return phi_star_from(n, q, cyclotomic_eval(n, q));
}

namespace detail {

// Largest divisor of a that is coprime to b.
inline mpz_class strip_common(mpz_class a, const mpz_class& b) {
    for (mpz_class g = gcd(a, b); g != 1; g = gcd(a, b)) a /= g;
    return a;
}

}  // namespace detail

/// Slow reference: strips from Phi_n(q) everything shared with
/// prod_{1 <= k < n} (q^k - 1). Never used on production paths.
inline mpz_class phi_star_oracle(u64 n, const mpz_class& q) {
    detail::require_positive(n, "phi_star_oracle");
    detail::require_q(q, "phi_star_oracle");
    mpz_class b = 1;
    for (u64 k = 1; k < n; ++k) b *= ipow(q, k) - 1;
    return detail::strip_common(cyclotomic_eval(n, q), b);
}

/// Largest divisor of q^n - 1 coprime to q^d - 1 for every proper divisor d
/// of n (the order of the largest subgroup of GF(q^n)^* meeting every proper
/// subfield's multiplicative group trivially).
inline mpz_class phi_star_subgroup_oracle(u64 n, const PrimePower& q) {
    detail::require_positive(n, "phi_star_subgroup_oracle");
    mpz_class b = 1;
    for (u64 d : divisors(n)) {
        if (d < n) b *= ipow(q.value(), d) - 1;
    }
    return detail::strip_common(ipow(q.value(), n) - 1, b);
}

inline mpz_class phi_star_subgroup_oracle(u64 n, const mpz_class& q) {
    detail::require_q(q, "phi_star_subgroup_oracle");
    auto pp = prime_power_decompose(q);
    if (!pp) throw std::invalid_argument("phi_star_subgroup_oracle: q = " + q.get_str() + " is not a prime power");
    return phi_star_subgroup_oracle(n, *pp);
}

}  // namespace phistar
