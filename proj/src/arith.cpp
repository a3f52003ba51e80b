#include "dnpairs/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dnpairs {

namespace {

using u64 = unsigned long long;
using i128 = __int128;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Modular inverse of a mod m, gcd(a, m) = 1.
long long invmod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long long q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::invalid_argument("invmod: arguments not coprime");
    return ((x % m) + m) % m;
}

// Square root of a QR mod odd prime p (Tonelli-Shanks). a in [0, p).
// Caller guarantees a solution exists.
u64 tonelli_shanks(u64 a, u64 p) {
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // write p-1 = q * 2^s with q odd
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    // find a quadratic non-residue z
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// Roots of y^2 = u (mod p^e = q) for u coprime to odd prime p. Empty if u is
// a non-residue mod p.
std::vector<long long> unit_roots_odd(long long u, long long p, long long q) {
    long long u0 = ((u % p) + p) % p;
    if (kronecker(u0, p) != 1) return {};
    long long y = static_cast<long long>(tonelli_shanks(static_cast<u64>(u0), static_cast<u64>(p)));
    long long pj = p;
    long long um = ((u % q) + q) % q;
    while (pj < q) {
        // Hensel: y -> y + t*pj with t = ((u - y^2)/pj) * (2y)^{-1} mod p
        long long pj1 = pj * p;
        i128 diff = (i128)um - (i128)y * y;
        long long d = static_cast<long long>(((diff / pj) % p + p) % p);
        long long t = static_cast<long long>(mulmod(static_cast<u64>(d),
                                                    static_cast<u64>(invmod(2 * y % p, p)),
                                                    static_cast<u64>(p)));
        y = y + t % p * pj % pj1;
        y %= pj1;
        pj = pj1;
    }
    long long y2 = q - y;
    if (y > y2) std::swap(y, y2);
    if (y == y2) return {y};
    return {y, y2};
}

// Roots of y^2 = u (mod 2^e) for odd u.
std::vector<long long> unit_roots_two(long long u, int e, long long q) {
    long long um = ((u % q) + q) % q;
    if (e == 1) return {1};
    if (e == 2) return um == 1 ? std::vector<long long>{1, 3} : std::vector<long long>{};
    if (um % 8 != 1) return {};
    long long x = 1;
    for (int j = 3; j < e; ++j) {
        long long mod_next = 1LL << (j + 1);
        if (((i128)x * x - um) % mod_next != 0) x += 1LL << (j - 1);
    }
    long long half = q >> 1;
    std::vector<long long> roots{x % q, (q - x) % q, (x + half) % q, (q - x + half) % q};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

long long pow_ll(long long p, int e) {
    long long r = 1;
    while (e--) r *= p;
    return r;
}

}  // namespace

SpfSieve::SpfSieve(long long limit) {
    if (limit < 1) limit = 1;
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    for (long long i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (long long j = i; j <= limit; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
        }
    }
}

unsigned long long isqrt_u64(unsigned long long m) {
    if (m == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(m)));
    while (r > 0 && (u128)r * r > m) --r;
    while ((u128)(r + 1) * (r + 1) <= m) ++r;
    return r;
}

long long isqrt(long long m) {
    if (m < 0) throw std::invalid_argument("isqrt: negative input");
    return static_cast<long long>(isqrt_u64(static_cast<u64>(m)));
}

mpz_class isqrt(const mpz_class& m) {
    if (m < 0) throw std::invalid_argument("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_square(long long m) {
    if (m < 0) return false;
    long long r = isqrt(m);
    return r * r == m;
}

bool is_square(const mpz_class& m) {
    return m >= 0 && mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

int kronecker(long long a, long long b) {
    if (a == 0 && b == 0) throw std::invalid_argument("kronecker: (0,0) undefined");
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while ((b & 1) == 0) {
        b >>= 1;
        ++twos;
    }
    if (twos & 1) {
        if ((a & 1) == 0) return 0;
        long long a8 = ((a % 8) + 8) % 8;
        if (a8 == 3 || a8 == 5) result = -result;
    }
    a = ((a % b) + b) % b;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            long long b8 = b % 8;
            if (b8 == 3 || b8 == 5) result = -result;
        }
        std::swap(a, b);
        if ((a & 3) == 3 && (b & 3) == 3) result = -result;
        a %= b;
    }
    return b == 1 ? result : 0;
}

Factorization factorize(long long m, const SpfSieve* sieve) {
    if (m < 1) throw std::invalid_argument("factorize: input must be positive");
    Factorization f;
    f.value = m;
    if (sieve && m <= sieve->limit()) {
        while (m > 1) {
            long long p = sieve->spf(m);
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
        return f;
    }
    for (long long p = 2; (i128)p * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

long long sigma1(long long m, const SpfSieve* sieve) {
    Factorization f = factorize(m, sieve);
    long long s = 1;
    for (auto [p, e] : f.factors) {
        long long term = 1, pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

DiscriminantSplit split_discriminant(long long D, const SpfSieve* sieve) {
    if (D == 0) throw std::invalid_argument("split_discriminant: zero input");
    long long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("split_discriminant: not a discriminant");
    if (D > 0 && is_square(D)) throw std::invalid_argument("split_discriminant: square discriminant");
    Factorization f = factorize(D < 0 ? -D : D, sieve);
    long long kernel = D < 0 ? -1 : 1;  // squarefree kernel, with sign
    for (auto [p, e] : f.factors)
        if (e & 1) kernel *= p;
    long long d0 = (((kernel % 4) + 4) % 4 == 1) ? kernel : 4 * kernel;
    long long ratio = D / d0;
    long long ff = isqrt(ratio);
    if (d0 * ff * ff != D) throw std::logic_error("split_discriminant: internal error");
    return {d0, ff};
}

long long twisted_sigma(long long f, long long d0, const SpfSieve* sieve) {
    if (f < 1) throw std::invalid_argument("twisted_sigma: f must be positive");
    Factorization fac = factorize(f, sieve);
    long long result = 1;
    for (auto [p, e] : fac.factors) {
        long long s_e = 1, s_e1 = 0, pk = 1;
        for (int i = 0; i < e; ++i) {
            if (i == e - 1) s_e1 = s_e;
            pk *= p;
            s_e += pk;
        }
        result *= s_e - kronecker(d0, p) * s_e1;
    }
    return result;
}

std::vector<long long> sqrt_mod_prime_power(long long n, long long p, int e) {
    long long q = pow_ll(p, e);
    long long c = ((n % q) + q) % q;
    if (c == 0) {
        long long step = pow_ll(p, (e + 1) / 2);
        std::vector<long long> roots;
        for (long long x = 0; x < q; x += step) roots.push_back(x);
        return roots;
    }
    int alpha = 0;
    long long u = c;
    while (u % p == 0) { u /= p; ++alpha; }
    if (alpha & 1) return {};
    int beta = alpha / 2;
    int e1 = e - alpha;
    long long q1 = pow_ll(p, e1);
    std::vector<long long> ys =
        (p == 2) ? unit_roots_two(u, e1, q1) : unit_roots_odd(u, p, q1);
    if (ys.empty()) return {};
    long long pb = pow_ll(p, beta);
    long long stride = q1 * pb;  // = p^(e1+beta); results mod q = p^(e1+2*beta)
    std::vector<long long> roots;
    roots.reserve(ys.size() * static_cast<size_t>(pb));
    for (long long y : ys)
        for (long long t = 0; t < pb; ++t) roots.push_back((pb * y + t * stride) % q);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<long long> sqrt_mod(long long n, long long m, const Factorization& fm) {
    if (m < 1) throw std::invalid_argument("sqrt_mod: modulus must be positive");
    if (fm.value != m) throw std::invalid_argument("sqrt_mod: factorization mismatch");
    std::vector<long long> acc{0};
    long long mod_acc = 1;
    for (auto [p, e] : fm.factors) {
        std::vector<long long> part = sqrt_mod_prime_power(n, p, e);
        if (part.empty()) return {};
        long long q = pow_ll(p, e);
        long long inv = invmod(mod_acc % q, q);
        std::vector<long long> next;
        next.reserve(acc.size() * part.size());
        for (long long x : acc)
            for (long long y : part) {
                long long k = static_cast<long long>(
                    mulmod(static_cast<u64>(((y - x) % q + q) % q), static_cast<u64>(inv),
                           static_cast<u64>(q)));
                next.push_back(x + mod_acc * k);
            }
        acc = std::move(next);
        mod_acc *= q;
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<long long> sqrt_mod(long long n, long long m, const SpfSieve* sieve) {
    return sqrt_mod(n, m, factorize(m, sieve));
}

}  // namespace dnpairs
