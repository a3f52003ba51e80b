#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dnpairs {

/// Prime factorization of a positive 64-bit integer, primes ascending.
struct Factorization {
    long long value = 1;
    std::vector<std::pair<long long, int>> factors;  // (prime, exponent), exponent >= 1
};

/// D = d0 * f^2 with d0 a fundamental discriminant.
struct DiscriminantSplit {
    long long d0 = 0;
    long long f = 1;
};

/// Smallest-prime-factor table for [0, limit]. Immutable after construction,
/// safe to share across threads.
class SpfSieve {
public:
    explicit SpfSieve(long long limit);
    long long limit() const { return static_cast<long long>(spf_.size()) - 1; }
    uint32_t spf(long long m) const { return spf_[static_cast<size_t>(m)]; }
    bool is_prime(long long m) const { return m >= 2 && spf(m) == m; }

private:
    std::vector<uint32_t> spf_;
};

/// Floor square root, exact integer arithmetic.
unsigned long long isqrt_u64(unsigned long long m);
long long isqrt(long long m);
mpz_class isqrt(const mpz_class& m);

/// Is m a perfect square? (0 counts as a square.)
bool is_square(long long m);
bool is_square(const mpz_class& m);

/// Kronecker symbol (a/b), the standard extension of the Jacobi symbol.
/// Requires (a,b) != (0,0).
int kronecker(long long a, long long b);

/// Factor m >= 1. Uses the sieve where m is within range, trial division
/// otherwise.
Factorization factorize(long long m, const SpfSieve* sieve = nullptr);

/// Sum of positive divisors. sigma1(1) = 1.
long long sigma1(long long m, const SpfSieve* sieve = nullptr);

/// Split a nonsquare discriminant D (= 0,1 mod 4, D != 0) as d0 * f^2.
DiscriminantSplit split_discriminant(long long D, const SpfSieve* sieve = nullptr);

/// prod_{p^e || f} (sigma1(p^e) - chi_{d0}(p) * sigma1(p^{e-1})).
/// Equals sum_{l|f} l * prod_{p|l} (1 - chi_{d0}(p)/p).
long long twisted_sigma(long long f, long long d0, const SpfSieve* sieve = nullptr);

/// All x in [0, p^e) with x^2 = n (mod p^e), ascending. p prime, p^e <= 2^62.
std::vector<long long> sqrt_mod_prime_power(long long n, long long p, int e);

/// All x in [0, m) with x^2 = n (mod m), ascending. fm must be the
/// factorization of m.
std::vector<long long> sqrt_mod(long long n, long long m, const Factorization& fm);
std::vector<long long> sqrt_mod(long long n, long long m, const SpfSieve* sieve = nullptr);

}  // namespace dnpairs
