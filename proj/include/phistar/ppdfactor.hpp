#pragma once

// Factorization of Phi*_n(q) into primitive prime divisors. Every prime
// factor is congruent to 1 mod n, so the factorization is recorded as the
// multiset of indices i with i*n + 1 dividing.

#include "phistar/cyclotomic.hpp"

#include <functional>
#include <string>

namespace phistar {

struct PpdFactorization {
    u64 n = 0;
    mpz_class q;
    /// (i, m_i) with i strictly ascending; i*n + 1 is prime.
    std::vector<std::pair<u64, unsigned>> exponents;

    bool empty() const { return exponents.empty(); }

    mpz_class prime(u64 index) const { return to_mpz(index) * to_mpz(n) + 1; }

    mpz_class value() const {
        mpz_class out = 1;
        for (auto [i, m] : exponents) out *= ipow(prime(i), m);
        return out;
    }

    /// Indices with multiplicity, ascending.
    std::vector<u64> indices() const {
        std::vector<u64> out;
        for (auto [i, m] : exponents) out.insert(out.end(), m, i);
        return out;
    }

    u64 multiplicity(u64 index) const {
        for (auto [i, m] : exponents)
            if (i == index) return m;
        return 0;
    }
};

class FactorBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FactorOptions {
    u64 max_candidates = 10'000'000;
    /// Re-check the final cofactor with is_prime.
    bool verify_cofactor = false;
    /// Stop as soon as the running cofactor is prime, when that can be
    /// decided deterministically. Off: plain scan up to the square root.
    bool prime_cofactor_exit = true;
    /// Called for each candidate i*n + 1 that divides the running cofactor.
    std::function<void(u64 candidate)> on_divisor;
};

/// Factors value = Phi*_n(q) by trial division over i*n + 1, i = 1, 2, ...
/// while (i*n + 1)^2 <= cofactor. Composite candidates are tried too; they
/// never divide because their prime factors (also 1 mod n, and smaller) were
/// removed first. What is left above the square-root bound is prime.
inline PpdFactorization factor_phi_star(u64 n, const mpz_class& q, const mpz_class& value,
                                        const FactorOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("factor_ppd: n must be >= 2");
    if (q < 2) throw std::invalid_argument("factor_ppd: q must be >= 2");
    if (value < 1) throw std::invalid_argument("factor_ppd: value must be positive");

    PpdFactorization out{n, q, {}};
    mpz_class big = value;
    u64 small = 0;
    bool is_small = fits_u64(big);
    if (is_small) small = big.get_ui();

    auto divides_out = [&](u64 i, u64 r) {
        unsigned m = 0;
        if (is_small) {
            while (small % r == 0) {
                small /= r;
                ++m;
            }
        } else {
            while (mpz_divisible_ui_p(big.get_mpz_t(), r)) {
                mpz_divexact_ui(big.get_mpz_t(), big.get_mpz_t(), r);
                ++m;
            }
            if (m && fits_u64(big)) {
                small = big.get_ui();
                is_small = true;
            }
        }
        if (m) {
            if (opts.on_divisor) opts.on_divisor(r);
            out.exponents.emplace_back(i, m);
        }
    };

    auto cofactor_is_prime = [&] {
        if (!opts.prime_cofactor_exit) return false;
        if (is_small) return small > 1 && is_prime(small);
        // The index (big - 1) / n must fit the 64-bit multiset entries.
        const mpz_class index = (big - 1) / to_mpz(n);
        return fits_u64(index) && big < deterministic_prime_limit() && is_prime(big);
    };

    // The cofactor is re-examined only when a candidate divided it.
    bool changed = true;
    for (u64 i = 1;; ++i) {
        if (changed && cofactor_is_prime()) break;
        const u128 r128 = static_cast<u128>(i) * n + 1;
        if (is_small) {
            if (r128 * r128 > small) break;
        } else if (r128 >> 64 == 0) {
            mpz_class r_sq = to_mpz(static_cast<u64>(r128));
            r_sq *= r_sq;
            if (r_sq > big) break;
        }
        if (i > opts.max_candidates || r128 >> 64 != 0)
            throw FactorBudgetExceeded("factor_ppd: budget of " + std::to_string(opts.max_candidates) +
                                       " candidates exceeded for n = " + std::to_string(n) + ", q = " + q.get_str());
        const std::size_t before = out.exponents.size();
        divides_out(i, static_cast<u64>(r128));
        changed = out.exponents.size() != before;
    }

    mpz_class rest = is_small ? to_mpz(small) : big;
    if (rest > 1) {
        mpz_class index, rem;
        const mpz_class rest_minus_1 = rest - 1;
        mpz_fdiv_qr_ui(index.get_mpz_t(), rem.get_mpz_t(), rest_minus_1.get_mpz_t(), n);
        if (rem != 0) throw std::logic_error("factor_ppd: cofactor " + rest.get_str() + " is not 1 mod n");
        if (opts.verify_cofactor && !is_prime(rest))
            throw std::logic_error("factor_ppd: cofactor " + rest.get_str() + " is not prime");
        out.exponents.emplace_back(to_u64(index), 1);
    }
    return out;
}

inline PpdFactorization factor_ppd(u64 n, const mpz_class& q, const FactorOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("factor_ppd: n must be >= 2");
    return factor_phi_star(n, q, phi_star(n, q).phi_star, opts);
}

/// "1,1,3" style; "-" for the empty multiset.
inline std::string multiset_notation(const PpdFactorization& f, std::string_view sep = ",") {
    if (f.empty()) return "-";
    std::string out;
    for (u64 i : f.indices()) {
        if (!out.empty()) out += sep;
        out += std::to_string(i);
    }
    return out;
}

}  // namespace phistar
