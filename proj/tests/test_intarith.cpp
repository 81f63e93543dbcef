#include "phistar/intarith.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace phistar;

TEST(Moebius, SpotValues) {
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(moebius(6), 1);
    EXPECT_EQ(moebius(12), 0);
    EXPECT_EQ(moebius(30), -1);
    EXPECT_EQ(moebius(7), -1);
}

TEST(Moebius, RejectsZero) { EXPECT_THROW(moebius(0), std::invalid_argument); }

TEST(Moebius, DivisorSumVanishesAboveOne) {
    for (u64 n = 1; n <= 10'000; ++n) {
        int sum = 0;
        for (u64 d : divisors(n)) sum += moebius(d);
        ASSERT_EQ(sum, n == 1 ? 1 : 0) << "n = " << n;
    }
}

TEST(EulerPhi, SpotValues) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(12), 4u);  // {1, 5, 7, 11}
    EXPECT_EQ(euler_phi(12), oracle::totient_by_scan(12));
    EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(EulerPhi, AgreesWithGcdScan) {
    for (u64 n = 1; n <= 2000; ++n) ASSERT_EQ(euler_phi(n), oracle::totient_by_scan(n)) << "n = " << n;
}

TEST(EulerPhi, DivisorSumIsN) {
    for (u64 n = 1; n <= 10'000; ++n) {
        u64 sum = 0;
        for (u64 d : divisors(n)) sum += euler_phi(d);
        ASSERT_EQ(sum, n);
    }
}

TEST(EulerPhi, LogarithmicLowerBound) {
    for (u64 n = 1; n <= 10'000; ++n) {
        const double bound = static_cast<double>(n) / (std::log2(static_cast<double>(n)) + 1.0);
        ASSERT_GE(static_cast<double>(euler_phi(n)), bound) << "n = " << n;
    }
}

TEST(Divisors, SpotValues) {
    EXPECT_EQ(divisors(1), (std::vector<u64>{1}));
    EXPECT_EQ(divisors(6), (std::vector<u64>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(20), oracle::divisors_by_scan(20));
    EXPECT_EQ(divisors(20), (std::vector<u64>{1, 2, 4, 5, 10, 20}));
    EXPECT_EQ(divisors(36), oracle::divisors_by_scan(36));
    EXPECT_THROW(divisors(0), std::invalid_argument);
}

TEST(Divisors, AgreesWithScan) {
    for (u64 n = 1; n <= 3000; ++n) ASSERT_EQ(divisors(n), oracle::divisors_by_scan(n));
}

TEST(IsPrime, SpotValues) {
    EXPECT_TRUE(is_prime(u64{3583}));
    EXPECT_TRUE(oracle::is_prime_by_trial(3583));
    EXPECT_FALSE(is_prime(u64{2047}));  // 23 * 89, strong pseudoprime to base 2
    EXPECT_FALSE(is_prime(u64{1}));
    EXPECT_FALSE(is_prime(u64{0}));
    EXPECT_TRUE(is_prime(u64{2}));
}

TEST(IsPrime, AgreesWithTrialDivisionToOneMillion) {
    std::vector<bool> composite(1'000'001, false);
    composite[0] = composite[1] = true;
    for (u64 p = 2; p * p <= 1'000'000; ++p)
        if (!composite[p])
            for (u64 m = p * p; m <= 1'000'000; m += p) composite[m] = true;
    for (u64 x = 0; x <= 1'000'000; ++x) ASSERT_EQ(is_prime(x), !composite[x]) << "x = " << x;
    // Spot-check the sieve itself against the trial-division oracle.
    for (u64 x = 0; x <= 20'000; ++x) ASSERT_EQ(!composite[x], oracle::is_prime_by_trial(x));
}

TEST(IsPrime, StrongPseudoprimesAreRejected) {
    // Smallest strong pseudoprimes to the first t prime bases.
    for (u64 x : {2047ull, 1373653ull, 25326001ull, 3215031751ull, 2152302898747ull, 3474749660383ull,
                  341550071728321ull, 3825123056546413051ull})
        EXPECT_FALSE(is_prime(x)) << x;
    EXPECT_FALSE(is_prime(mpz_class("318665857834031151167461")));
    EXPECT_FALSE(is_prime(mpz_class("3317044064679887385961981")));
}

TEST(IsPrime, WideIntegers) {
    EXPECT_TRUE(is_prime(mpz_class("18446744073709551557")));  // largest prime below 2^64
    EXPECT_TRUE(is_prime(mpz_class("170141183460469231731687303715884105727")));  // 2^127 - 1
    EXPECT_FALSE(is_prime(mpz_class("340282366920938463463374607431768211457")));  // F7, composite
    const mpz_class m61("2305843009213693951");
    EXPECT_FALSE(is_prime(mpz_class(m61 * m61)));
    EXPECT_EQ(is_prime(to_mpz(18446744073709551557ull)), is_prime(u64{18446744073709551557ull}));
}

TEST(PrimePowerDecompose, SpotValues) {
    auto eight = prime_power_decompose(u64{8});
    ASSERT_TRUE(eight);
    EXPECT_EQ(eight->base(), 2);
    EXPECT_EQ(eight->exponent(), 3u);
    auto cube = prime_power_decompose(u64{27});
    ASSERT_TRUE(cube);
    EXPECT_EQ(cube->base(), 3);
    EXPECT_EQ(cube->exponent(), 3u);
    EXPECT_FALSE(prime_power_decompose(u64{6}));
    EXPECT_FALSE(prime_power_decompose(u64{36}));
    auto big = prime_power_decompose(u64{1} << 40);
    ASSERT_TRUE(big);
    EXPECT_EQ(big->exponent(), 40u);
    EXPECT_THROW(prime_power_decompose(u64{1}), std::invalid_argument);
}

TEST(PrimePowerDecompose, AgreesWithTrialDivision) {
    for (u64 x = 2; x <= 20'000; ++x) {
        auto pp = prime_power_decompose(x);
        ASSERT_EQ(pp.has_value(), oracle::is_prime_power_by_trial(x)) << x;
        if (pp) ASSERT_EQ(pp->value(), to_mpz(x));
    }
}

TEST(PrimePower, RejectsInvalidParts) {
    EXPECT_THROW(PrimePower(4, 1), std::invalid_argument);
    EXPECT_THROW(PrimePower(3, 0), std::invalid_argument);
    EXPECT_EQ(PrimePower(5, 2).value(), 25);
}

TEST(NextPrimePower, SpotValues) {
    EXPECT_EQ(next_prime_power(u64{1}).value(), 2);
    EXPECT_EQ(next_prime_power(u64{7}).value(), 8);
    EXPECT_EQ(next_prime_power(u64{9}).value(), 11);
    std::vector<long> seq;
    mpz_class x = 1;
    for (int i = 0; i < 10; ++i) {
        x = next_prime_power(x).value();
        seq.push_back(x.get_si());
    }
    EXPECT_EQ(seq, (std::vector<long>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}));
}

TEST(NextPrimePower, NoGapsUpToOneMillion) {
    std::vector<bool> is_pp(1'000'100, false);
    for (u64 p = 2; p < is_pp.size(); ++p) {
        if (!is_prime(p)) continue;
        for (u64 v = p; v < is_pp.size(); v *= p) is_pp[v] = true;
    }
    mpz_class x = 1;
    u64 last = 1;
    while (last <= 1'000'000) {
        PrimePower next = next_prime_power(x);
        const u64 v = next.value().get_ui();
        ASSERT_TRUE(prime_power_decompose(v).has_value());
        for (u64 y = last + 1; y < v; ++y) ASSERT_FALSE(is_pp[y]) << "missed prime power " << y;
        ASSERT_TRUE(is_pp[v]);
        last = v;
        x = next.value();
    }
}

TEST(TwoAdicSplit, SpotValues) {
    auto a = two_adic_split(18);
    EXPECT_EQ(a.two_part, 2);
    EXPECT_EQ(a.odd_part, 9);
    auto b = two_adic_split(72);
    EXPECT_EQ(b.two_part, 8);
    EXPECT_EQ(b.odd_part, 9);
    auto c = two_adic_split(7);
    EXPECT_EQ(c.two_part, 1);
    EXPECT_EQ(c.odd_part, 7);
    EXPECT_THROW(two_adic_split(0), std::invalid_argument);
}

TEST(TwoAdicSplit, Recombines) {
    for (long x = 1; x <= 5000; ++x) {
        auto s = two_adic_split(x);
        ASSERT_EQ(s.two_part * s.odd_part, x);
        ASSERT_TRUE(mpz_odd_p(s.odd_part.get_mpz_t()));
        ASSERT_EQ(mpz_popcount(s.two_part.get_mpz_t()), 1u);
    }
}

TEST(LargestPrimeFactor, SpotValues) {
    EXPECT_EQ(largest_prime_factor(6), 3u);
    EXPECT_EQ(largest_prime_factor(20), 5u);
    EXPECT_EQ(largest_prime_factor(1), 0u);
    EXPECT_EQ(largest_prime_factor(97), 97u);
    EXPECT_EQ(largest_prime_factor(1024), 2u);
}
