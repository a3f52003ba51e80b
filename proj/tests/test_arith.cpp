#include <doctest.h>

#include <random>

#include "dnpairs/arith.hpp"
#include "oracles.hpp"

using namespace dnpairs;

TEST_SUITE_BEGIN("arith");

TEST_CASE("isqrt basics") {
    CHECK(isqrt(0LL) == 0);
    CHECK(isqrt(15LL) == 3);
    CHECK(isqrt(1000000000000000000LL) == 1000000000);
    CHECK(isqrt(mpz_class("100000000000000000000000000000000000000")) ==
          mpz_class("10000000000000000000"));
    CHECK_THROWS_AS(isqrt(-1LL), std::invalid_argument);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 20000; ++i) {
        unsigned long long m = rng() >> (rng() % 40);
        unsigned long long r = isqrt_u64(m);
        CHECK((__int128)r * r <= (__int128)m);
        CHECK((__int128)(r + 1) * (r + 1) > (__int128)m);
    }
}

TEST_CASE("is_square") {
    CHECK(is_square(0LL));
    CHECK(is_square(49LL));
    CHECK(!is_square(48LL));
    CHECK(!is_square(-4LL));
}

TEST_CASE("kronecker examples") {
    // x^2 = -4 (mod 5) is solvable (x = 1: 1 = -4 mod 5), so (-4/5) = +1
    CHECK(!oracles::brute_sqrt_mod(-4, 5).empty());
    CHECK(kronecker(-4, 5) == 1);
    // x^2 = 5 (mod 8) has no solution
    CHECK(oracles::brute_sqrt_mod(5, 8).empty());
    CHECK(kronecker(5, 2) == -1);
    for (long long d : {-7, -3, 0, 2, 9, 123456789})
        CHECK(kronecker(d, 1) == 1);
    CHECK_THROWS_AS(kronecker(0, 0), std::invalid_argument);
}

TEST_CASE("kronecker agrees with gmp") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20000; ++i) {
        long long a = static_cast<long long>(rng() % 2001) - 1000;
        long long b = static_cast<long long>(rng() % 2001) - 1000;
        if (a == 0 && b == 0) continue;
        mpz_class az(static_cast<long>(a));
        CHECK(kronecker(a, b) == mpz_kronecker_si(az.get_mpz_t(), static_cast<long>(b)));
    }
}

TEST_CASE("kronecker legendre criterion at odd primes") {
    for (long long p : {3, 5, 7, 11, 13, 101, 997}) {
        for (long long a = -30; a <= 30; ++a) {
            int sym = kronecker(a, p);
            bool solvable = !oracles::brute_sqrt_mod(a, p).empty();
            if (a % p == 0)
                CHECK(sym == 0);
            else
                CHECK(sym == (solvable ? 1 : -1));
        }
    }
}

TEST_CASE("kronecker multiplicative in the bottom argument") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        long long a = static_cast<long long>(rng() % 401) - 200;
        long long b = static_cast<long long>(rng() % 199) - 99;
        long long c = static_cast<long long>(rng() % 199) - 99;
        if (a == 0 && (b == 0 || c == 0 || b * c == 0)) continue;
        CHECK(kronecker(a, b * c) == kronecker(a, b) * kronecker(a, c));
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(1).factors.empty());
    Factorization f20 = factorize(20);
    CHECK(f20.factors == std::vector<std::pair<long long, int>>{{2, 2}, {5, 1}});
    CHECK(factorize(97).factors == std::vector<std::pair<long long, int>>{{97, 1}});

    SpfSieve sieve(10000);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
        long long m = 1 + static_cast<long long>(rng() % 9999);
        Factorization with = factorize(m, &sieve);
        Factorization without = factorize(m);
        CHECK(with.factors == without.factors);
        long long prod = 1;
        long long last = 1;
        for (auto [p, e] : with.factors) {
            CHECK(p > last);
            last = p;
            CHECK(e >= 1);
            for (int j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == m);
    }
}

TEST_CASE("sigma1") {
    CHECK(sigma1(1) == 1);
    CHECK(sigma1(4) == 7);
    CHECK(sigma1(12) == 28);
}

TEST_CASE("split_discriminant examples") {
    DiscriminantSplit s = split_discriminant(-20);
    CHECK(s.d0 == -20);
    CHECK(s.f == 1);
    s = split_discriminant(-16);
    CHECK(s.d0 == -4);
    CHECK(s.f == 2);
    s = split_discriminant(20);
    CHECK(s.d0 == 5);
    CHECK(s.f == 2);
    CHECK_THROWS_AS(split_discriminant(0), std::invalid_argument);
    CHECK_THROWS_AS(split_discriminant(7), std::invalid_argument);   // 3 mod 4
    CHECK_THROWS_AS(split_discriminant(16), std::invalid_argument);  // square
}

TEST_CASE("split_discriminant round trip") {
    for (long long d0 = -100; d0 <= 100; ++d0) {
        if (d0 == 0 || (d0 > 0 && is_square(d0))) continue;
        long long dm = ((d0 % 4) + 4) % 4;
        if (dm != 0 && dm != 1) continue;
        if (split_discriminant(d0).f != 1) continue;  // keep fundamental d0 only
        for (long long f = 1; f <= 50; ++f) {
            DiscriminantSplit s = split_discriminant(d0 * f * f);
            CHECK(s.d0 == d0);
            CHECK(s.f == f);
        }
    }
}

TEST_CASE("twisted_sigma examples") {
    CHECK(twisted_sigma(1, -4) == 1);
    CHECK(twisted_sigma(1, 5) == 1);
    // chi_{-4}(2) = 0: sigma1(2) - 0 = 3; direct sum 1 + 2*(1-0) = 3
    CHECK(twisted_sigma(2, -4) == 3);
    // chi_5(2) = -1: sigma1(2) + sigma1(1) = 4; direct sum 1 + 2*(1+1/2) = 4
    CHECK(twisted_sigma(2, 5) == 4);
}

TEST_CASE("twisted_sigma equals the divisor sum") {
    // Euler-product form vs. the direct sum over divisors, exactly.
    for (long long d0 : {-4LL, -3LL, 5LL, 8LL, -20LL}) {
        auto chi = [&](long long p) { return static_cast<long long>(kronecker(d0, p)); };
        for (long long f = 1; f <= 10000; ++f)
            REQUIRE(twisted_sigma(f, d0) == oracles::divisor_sum_g(f, chi));
    }
}

TEST_CASE("sqrt_mod examples") {
    CHECK(sqrt_mod(1, 8) == std::vector<long long>{1, 3, 5, 7});
    CHECK(sqrt_mod(2, 3).empty());
    CHECK(sqrt_mod(0, 1) == std::vector<long long>{0});
}

TEST_CASE("sqrt_mod matches brute force, dense small moduli") {
    std::mt19937_64 rng(5);
    SpfSieve sieve(2000);
    for (long long m = 1; m <= 2000; ++m) {
        Factorization fm = factorize(m, &sieve);
        for (int i = 0; i < 12; ++i) {
            long long n = static_cast<long long>(rng() % (2 * m + 40)) - m - 20;
            CHECK(sqrt_mod(n, m, fm) == oracles::brute_sqrt_mod(n, m));
        }
    }
}

TEST_CASE("sqrt_mod matches brute force, sampled large moduli") {
    std::mt19937_64 rng(6);
    SpfSieve sieve(100000);
    for (int i = 0; i < 250; ++i) {
        long long m = 2000 + static_cast<long long>(rng() % 98001);
        Factorization fm = factorize(m, &sieve);
        for (int j = 0; j < 6; ++j) {
            long long n = static_cast<long long>(rng() % 2001) - 1000;
            CHECK(sqrt_mod(n, m, fm) == oracles::brute_sqrt_mod(n, m));
        }
    }
}

TEST_CASE("sqrt_mod prime powers with shared factors") {
    // n divisible by p, including odd powers (no roots) and even powers.
    CHECK(sqrt_mod_prime_power(18, 3, 3) == oracles::brute_sqrt_mod(18, 27));   // v_3 = 2
    CHECK(sqrt_mod_prime_power(3, 3, 3) == oracles::brute_sqrt_mod(3, 27));     // v_3 = 1: empty
    CHECK(sqrt_mod_prime_power(0, 3, 4) == oracles::brute_sqrt_mod(0, 81));
    CHECK(sqrt_mod_prime_power(0, 2, 7) == oracles::brute_sqrt_mod(0, 128));
    CHECK(sqrt_mod_prime_power(4, 2, 5) == oracles::brute_sqrt_mod(4, 32));
    CHECK(sqrt_mod_prime_power(8, 2, 5) == oracles::brute_sqrt_mod(8, 32));
    CHECK(sqrt_mod_prime_power(16, 2, 6) == oracles::brute_sqrt_mod(16, 64));
    for (int e = 1; e <= 10; ++e)
        for (long long n = -5; n <= 40; ++n)
            CHECK(sqrt_mod_prime_power(n, 2, e) == oracles::brute_sqrt_mod(n, 1LL << e));
}

TEST_SUITE_END();
