#pragma once

// Arithmetic side of the Alt(c)/Sym(c) application: pairs whose Phi*_n(q)
// factors as prod_{i=1..4} (i*n + 1)^{m_i} with m_1 <= 3 and m_2, m_3, m_4 <= 1,
// and the admissible degree interval [c0, c1] for n >= 4.

#include "phistar/enumerate.hpp"

namespace phistar {

struct ClassificationRow {
    u64 n = 0;
    PrimePower q;
    PpdFactorization factorization;
    std::optional<u64> c0;
    std::optional<u64> c1;
};

/// 1 if the characteristic of q does not divide c, else 2.
inline unsigned delta(const mpz_class& c, const PrimePower& q) {
    if (c < 1) throw std::invalid_argument("delta: c must be >= 1");
    return mpz_divisible_p(c.get_mpz_t(), q.base().get_mpz_t()) ? 2 : 1;
}

/// I is a sub-multiset of {1, 1, 1, 2, 3, 4}.
inline bool has_restricted_shape(const PpdFactorization& f) {
    for (auto [i, m] : f.exponents) {
        if (i == 1 && m <= 3) continue;
        if (i >= 2 && i <= 4 && m <= 1) continue;
        return false;
    }
    return true;
}

/// c0 = max(r, 15) with r the largest prime dividing Phi*_n(q) (0 when it
/// is 1), and c1 = 4n + delta(4n + 2, q).
inline std::pair<u64, u64> degree_interval(u64 n, const PrimePower& q, const PpdFactorization& f) {
    if (n <= 3) throw std::invalid_argument("degree_interval: requires n >= 4");
    const u64 r = f.empty() ? 0 : to_u64(f.prime(f.exponents.back().first));
    const u64 c0 = std::max<u64>(r, 15);
    const u64 c1 = 4 * n + delta(to_mpz(4 * n + 2), q);
    return {c0, c1};
}

inline std::pair<u64, u64> degree_interval(const ClassificationRow& row) {
    return degree_interval(row.n, row.q, row.factorization);
}

/// Keeps the rows (n >= 3) of restricted shape; rows with n >= 4 get their
/// degree interval, n == 3 rows keep it empty.
inline std::vector<ClassificationRow> filter_restricted_shape(const PairSet& set) {
    std::vector<ClassificationRow> out;
    for (const PairRow& row : set.rows) {
        if (row.n < 3) continue;
        if (!row.factorization) throw std::invalid_argument("filter_restricted_shape: rows must carry factorizations");
        if (!has_restricted_shape(*row.factorization)) continue;
        ClassificationRow c{row.n, row.q, *row.factorization, std::nullopt, std::nullopt};
        if (row.n >= 4) {
            auto [lo, hi] = degree_interval(c);
            c.c0 = lo;
            c.c1 = hi;
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Phi*_n(q) divides (n+1)^3 (2n+1)(3n+1)(4n+1) <= 16 n^7 for n >= 4, and is
/// at most 7 * 13 for n == 3; so the search runs over Phi*_n(q) <= 16 n^7.
inline std::vector<ClassificationRow> classify_restricted_shape(const EnumerateOptions& opts = {}) {
    return filter_restricted_shape(enumerate_phi_star_bounded(16, 7, opts));
}

}  // namespace phistar
