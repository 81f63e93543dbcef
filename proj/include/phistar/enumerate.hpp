#pragma once

// Terminating enumerations of the pairs (n, q), q a prime power, with
//   Phi_n(q)  <= c * n^k   (n >= 3),
//   Phi*_n(q) <= c * n^k   (n >= 3), and
//   Phi*_2(q) <= c * 2^k   (n == 2, primes q = 3 mod 4 capped at B).
//
// Floating point only decides which n are worth visiting. Every emitted pair
// is checked against floor(c * n^k), computed exactly from the rational c, k.

#include "phistar/ppdfactor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string_view>
#include <thread>

namespace phistar {

/// Parses "16", "0.5", "-3", "3/2" or "1.25e2" into an exact rational.
inline mpq_class parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    if (text.find('/') != std::string_view::npos) {
        mpq_class out;
        if (out.set_str(std::string(text), 10) != 0 || out.get_den() == 0) throw fail();
        out.canonicalize();
        return out;
    }
    std::string digits;
    long exp10 = 0;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    bool seen_point = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            digits += ch;
            seen_digit = true;
            if (seen_point) --exp10;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw fail();
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') throw fail();
        const std::string tail(text.substr(pos + 1));
        if (tail.empty()) throw fail();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(tail, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != tail.size() || e > 4096 || e < -4096) throw fail();
        exp10 += e;
    }
    mpq_class out{mpz_class(digits, 10)};
    const mpz_class scale = ipow(mpz_class{10}, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0) out /= scale;
    else out *= scale;
    out.canonicalize();
    return negative ? mpq_class(-out) : out;
}

/// The constants c, k of a bound c * n^k together with the quantities that
/// certify termination: s = 2 + log2(c), t = (s + k) / ln 2, u = k / (ln 2)^2,
/// b = e^(1 - t / (2u)), and g(x) = x - s - t ln x - u (ln x)^2.
///
/// For g(n) >= 0 one has 2^(n / (log2 n + 1) - 2) >= c * n^k, and past b
/// g is convex, so once g(n) > 0 and g'(n) > 0 both stay positive.
class BoundSpec {
public:
    /// Denominator cap for k; c * n^k is compared through a (den k)-th root.
    static constexpr unsigned long max_k_denominator = 10'000;

    BoundSpec(mpq_class c, mpq_class k) : c_(std::move(c)), k_(std::move(k)) {
        c_.canonicalize();
        k_.canonicalize();
        if (c_ <= 0) throw std::invalid_argument("BoundSpec: c must be positive");
        if (k_ <= 0) throw std::invalid_argument("BoundSpec: k must be positive");
        if (k_.get_den() > max_k_denominator)
            throw std::invalid_argument("BoundSpec: denominator of k exceeds " + std::to_string(max_k_denominator));
        const double ln2 = std::log(2.0);
        log2_c_ = std::log2(c_.get_num().get_d()) - std::log2(c_.get_den().get_d());
        k_d_ = k_.get_d();
        s_ = 2.0 + log2_c_;
        t_ = (s_ + k_d_) / ln2;
        u_ = k_d_ / (ln2 * ln2);
        b_ = std::exp(1.0 - t_ / (2.0 * u_));
    }

    BoundSpec(long c, long k) : BoundSpec(mpq_class(c), mpq_class(k)) {}

    const mpq_class& c() const { return c_; }
    const mpq_class& k() const { return k_; }
    double s() const { return s_; }
    double t() const { return t_; }
    double u() const { return u_; }
    double b() const { return b_; }

    double g(double x) const {
        const double l = std::log(x);
        return x - s_ - t_ * l - u_ * l * l;
    }

    double g_prime(double x) const { return 1.0 - t_ / x - 2.0 * u_ * std::log(x) / x; }

    /// floor(c * n^k), exact.
    mpz_class floor_value(u64 n) const {
        detail::require_positive(n, "BoundSpec::floor_value");
        const unsigned long a = k_.get_num().get_ui();
        const unsigned long b = k_.get_den().get_ui();
        mpz_class y = ipow(c_.get_num(), b) * ipow(to_mpz(n), a);
        if (b > 1) mpz_root(y.get_mpz_t(), y.get_mpz_t(), b);
        mpz_fdiv_q(y.get_mpz_t(), y.get_mpz_t(), c_.get_den().get_mpz_t());
        return y;
    }

    /// value <= c * n^k
    bool admits(const mpz_class& value, u64 n) const { return value <= floor_value(n); }

    /// log2(c * n^k) in floating point.
    double log2_value(u64 n) const { return log2_c_ + k_d_ * std::log2(static_cast<double>(n)); }

private:
    mpq_class c_, k_;
    double log2_c_ = 0, k_d_ = 0;
    double s_ = 0, t_ = 0, u_ = 0, b_ = 0;
};

/// Slack on the floating-point candidate tests; only widens the search.
inline constexpr double candidate_slack = 1e-6;

/// Smallest n >= 3 with n > b, g(n) > 0 and g'(n) > 0. No n at or beyond it
/// has Phi_n(2) <= c * n^k.
inline u64 termination_n(const BoundSpec& bound) {
    for (u64 n = 3;; ++n) {
        const double x = static_cast<double>(n);
        if (x > bound.b() && bound.g(x) > 0 && bound.g_prime(x) > 0) return n;
    }
}

/// Necessary conditions for some q with Phi_n(q) <= c * n^k: g(n) < 0 and
/// 2^(phi(n) - 2) < c * n^k.
inline bool is_candidate_n(const BoundSpec& bound, u64 n) {
    if (!(bound.g(static_cast<double>(n)) < candidate_slack)) return false;
    return static_cast<double>(euler_phi(n)) - 2.0 < bound.log2_value(n) + candidate_slack;
}

enum class SetTag { M, MSTAR_GE3, R2, S2, T2 };

constexpr std::string_view to_string(SetTag t) {
    switch (t) {
        case SetTag::M: return "M";
        case SetTag::MSTAR_GE3: return "Mstar3";
        case SetTag::R2: return "R";
        case SetTag::S2: return "S";
        case SetTag::T2: return "T";
    }
    return "?";
}

struct PairRow {
    u64 n = 0;
    PrimePower q;
    mpz_class phi_n;
    mpz_class phi_star;
    std::optional<PpdFactorization> factorization;
    SetTag set = SetTag::M;
};

/// Rows ordered by (n, q), no duplicates.
struct PairSet {
    SetTag tag = SetTag::M;
    std::vector<PairRow> rows;
};

enum class PhiEvaluation {
    moebius_quotient,  // prod (q^{n/d} - 1)^{mu(d)}
    coefficients,      // Horner on the memoized coefficients of Phi_n
};

struct EnumerateOptions {
    unsigned jobs = 1;
    PhiEvaluation evaluation = PhiEvaluation::moebius_quotient;
    /// Attach the factorization of Phi*_n(q) to every row.
    bool factorize = true;
    FactorOptions factor;
};

namespace detail {

/// Runs fn(0..count-1) on up to `jobs` threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
                    try {
                        results[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
    return results;
}

inline PairRow make_row(u64 n, const PrimePower& q, PhiStarResult r, SetTag tag, const EnumerateOptions& opts) {
    PairRow row{n, q, std::move(r.phi_n), std::move(r.phi_star), std::nullopt, tag};
    if (opts.factorize) row.factorization = factor_phi_star(n, q.value(), row.phi_star, opts.factor);
    return row;
}

// Walks q = 2, 3, 4, 5, 7, ... while Phi_n(q) <= walk_limit; keeps the rows
// whose Phi*_n(q) is at most star_limit (when given).
inline std::vector<PairRow> walk_prime_powers(u64 n, const mpz_class& walk_limit, const mpz_class* star_limit,
                                              SetTag tag, const EnumerateOptions& opts) {
    std::vector<PairRow> rows;
    std::optional<CyclotomicPolynomial> poly;
    if (opts.evaluation == PhiEvaluation::coefficients) poly = cyclotomic_coeffs(n);
    for (PrimePower q(2, 1);; q = next_prime_power(q.value())) {
        mpz_class value = poly ? poly->evaluate(q.value()) : cyclotomic_eval(n, q.value());
        if (value > walk_limit) break;
        PhiStarResult r = phi_star_from(n, q.value(), std::move(value));
        if (star_limit && r.phi_star > *star_limit) continue;
        rows.push_back(make_row(n, q, std::move(r), tag, opts));
    }
    return rows;
}

inline std::vector<u64> candidate_ns(const BoundSpec& bound) {
    std::vector<u64> out;
    const u64 stop = termination_n(bound);
    for (u64 n = 3; n < stop; ++n)
        if (is_candidate_n(bound, n)) out.push_back(n);
    return out;
}

inline PairSet flatten(SetTag tag, std::vector<std::vector<PairRow>> parts) {
    PairSet out{tag, {}};
    for (auto& part : parts)
        for (auto& row : part) out.rows.push_back(std::move(row));
    return out;
}

}  // namespace detail

/// All (n, q) with n >= 3, q a prime power and Phi_n(q) <= c * n^k.
inline PairSet enumerate_phi_bounded(const BoundSpec& bound, const EnumerateOptions& opts = {}) {
    const std::vector<u64> ns = detail::candidate_ns(bound);
    auto parts = detail::parallel_map(ns.size(), opts.jobs, [&](std::size_t i) {
        return detail::walk_prime_powers(ns[i], bound.floor_value(ns[i]), nullptr, SetTag::M, opts);
    });
    return detail::flatten(SetTag::M, std::move(parts));
}

/// All (n, q) with n >= 3, q a prime power and Phi*_n(q) <= c * n^k. Since
/// n * Phi*_n(q) >= Phi_n(q) for n >= 3, these lie inside the Phi-bounded set
/// for c * n^(k+1), which is walked and filtered.
inline PairSet enumerate_phi_star_bounded(const mpq_class& c, const mpq_class& k, const EnumerateOptions& opts = {}) {
    const BoundSpec target(c, k);
    const BoundSpec walk(c, k + 1);
    const std::vector<u64> ns = detail::candidate_ns(walk);
    auto parts = detail::parallel_map(ns.size(), opts.jobs, [&](std::size_t i) {
        const mpz_class star_limit = target.floor_value(ns[i]);
        return detail::walk_prime_powers(ns[i], walk.floor_value(ns[i]), &star_limit, SetTag::MSTAR_GE3, opts);
    });
    return detail::flatten(SetTag::MSTAR_GE3, std::move(parts));
}

/// The n = 2 solutions of Phi*_2(q) <= c * 2^k, split by q mod 4:
///   R  q even or q = 1 mod 4 (finite),
///   S  q = p^l = 3 mod 4 with l >= 3 (finite),
///   T  q = 3 mod 4 prime, only q <= B (possibly infinite without the cap).
struct PhiStarN2Sets {
    PairSet r{SetTag::R2, {}};
    PairSet s{SetTag::S2, {}};
    PairSet t{SetTag::T2, {}};

    /// Union ordered by q.
    std::vector<PairRow> merged() const {
        std::vector<PairRow> out;
        for (const PairSet* set : {&r, &s, &t}) out.insert(out.end(), set->rows.begin(), set->rows.end());
        std::sort(out.begin(), out.end(), [](const PairRow& a, const PairRow& b) { return a.q < b.q; });
        return out;
    }
};

inline PhiStarN2Sets enumerate_phi_star_n2(const mpq_class& c, const mpq_class& k, const mpz_class& cap,
                                           const EnumerateOptions& opts = {}) {
    if (cap <= 0) throw std::invalid_argument("enumerate_phi_star_n2: B must be positive");
    const BoundSpec bound(c, k);
    const mpz_class limit = bound.floor_value(2);          // floor(c * 2^k)
    const mpz_class half_limit = limit / 2;                // floor(c * 2^(k-1))
    PhiStarN2Sets out;

    auto add = [&](PairSet& set, const PrimePower& q) {
        PhiStarResult r = phi_star_from(2, q.value(), q.value() + 1);
        if (r.phi_star > limit) return;
        set.rows.push_back(detail::make_row(2, q, std::move(r), set.tag, opts));
    };

    // Powers of 2 with q + 1 <= c * 2^k.
    for (unsigned e = 1;; ++e) {
        PrimePower q(2, e);
        if (q.value() + 1 > limit) break;
        add(out.r, q);
    }
    // Prime powers q = 1 mod 4 with (q + 1) / 2 <= c * 2^k.
    for (mpz_class q = 5; (q + 1) / 2 <= limit; q += 4) {
        if (auto pp = prime_power_decompose(q)) add(out.r, *pp);
    }
    std::sort(out.r.rows.begin(), out.r.rows.end(), [](const PairRow& a, const PairRow& b) { return a.q < b.q; });

    // Primes p = 3 mod 4 up to B.
    for (mpz_class p = 3; p <= cap; p += 4) {
        if (is_prime(p)) add(out.t, PrimePower(p, 1));
    }

    // q = p^l, l >= 3 odd: 2 p^(l-2) < (p^l + 1)/(p + 1) <= Phi*_2(q) forces
    // p^(l-2) <= c * 2^(k-1).
    for (unsigned long l = 3;; l += 2) {
        if (ipow(mpz_class{3}, l - 2) > half_limit) break;
        for (mpz_class p = 3; ipow(p, l - 2) <= half_limit; p += 4) {
            if (!is_prime(p)) continue;
            const mpz_class alternating = (ipow(p, l) + 1) / (p + 1);
            if (alternating > limit) continue;
            add(out.s, PrimePower(p, static_cast<unsigned>(l)));
        }
    }
    std::sort(out.s.rows.begin(), out.s.rows.end(), [](const PairRow& a, const PairRow& b) { return a.q < b.q; });
    return out;
}

}  // namespace phistar
