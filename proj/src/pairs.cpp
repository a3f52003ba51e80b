#include "dnpairs/pairs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "dnpairs/arith.hpp"

namespace dnpairs {

namespace {

using i128 = __int128;

// Roots of x^2 = n (mod q) for every prime power q <= T, in one flat CSR
// array. Built once per run, then read-only and shared across workers.
struct PrimePowerRoots {
    std::vector<uint32_t> offset;  // valid at prime powers q
    std::vector<uint16_t> count;
    std::vector<uint32_t> data;

    PrimePowerRoots(long long n, long long T, const SpfSieve& sieve) {
        offset.assign(static_cast<size_t>(T) + 1, 0);
        count.assign(static_cast<size_t>(T) + 1, 0);
        for (long long p = 2; p <= T; ++p) {
            if (!sieve.is_prime(p)) continue;
            long long q = p;
            for (int e = 1; q <= T; ++e) {
                std::vector<long long> roots = sqrt_mod_prime_power(n, p, e);
                offset[q] = static_cast<uint32_t>(data.size());
                if (roots.size() > 0xffff) throw std::overflow_error("root table overflow");
                count[q] = static_cast<uint16_t>(roots.size());
                for (long long r : roots) data.push_back(static_cast<uint32_t>(r));
                if (q > T / p) break;
                q *= p;
            }
        }
    }
};

// Smallest value >= lo congruent to r mod m.
inline long long first_in_class(long long lo, long long r, long long m) {
    long long d = (r - lo) % m;
    if (d < 0) d += m;
    return lo + d;
}

// ceil(sqrt(v)) for v >= 0.
inline long long ceil_sqrt(long long v) {
    long long r = isqrt(v);
    return r * r == v ? r : r + 1;
}

// All pairs owned by modulus m (|a| = m), given the sorted residues r with
// r^2 = n (mod m). Calls f(a, c, B).
template <typename F>
void pairs_for_modulus(long long n, long long T, long long m, const long long* roots,
                       int nroots, bool include_b_zero, F&& f) {
    // a = +m: c = (B^2 - n)/m increases with B; emit while -T <= c < m, c != 0.
    long long hi_pos = -1, lo_pos = 0;
    if (m * m + n >= 1) hi_pos = isqrt(m * m + n - 1);
    if (n - m * T > 0) lo_pos = ceil_sqrt(n - m * T);
    // a = -m: c = (n - B^2)/m decreases with B; emit while c < -m and c >= -T.
    long long lo_neg = 0, hi_neg = -1;
    if (n + m * m >= 0) lo_neg = isqrt(n + m * m) + 1;
    if (n + m * T >= 0) hi_neg = isqrt(n + m * T);

    for (int i = 0; i < nroots; ++i) {
        long long r = roots[i];
        for (long long B = first_in_class(lo_pos, r, m); B <= hi_pos; B += m) {
            if (B * B == n) continue;  // c = 0
            if (!include_b_zero && B == 0) continue;
            f(m, (B * B - n) / m, B);
        }
        for (long long B = first_in_class(lo_neg, r, m); B <= hi_neg; B += m) {
            if (!include_b_zero && B == 0) continue;
            f(-m, (n - B * B) / m, B);
        }
    }
}

// Walk moduli first, first+stride, ... <= T, resolving x^2 = n (mod m) by
// CRT over the prime power table, and hand each modulus with its residue
// list to pairs_for_modulus.
template <typename F>
void scan_moduli(long long n, long long T, long long first, long long stride,
                 const SpfSieve& sieve, const PrimePowerRoots& table, bool include_b_zero,
                 F&& per_pair) {
    std::vector<long long> roots, next;
    for (long long m = first; m <= T; m += stride) {
        roots.assign(1, 0);
        long long mm = m, mod_acc = 1;
        bool solvable = true;
        while (mm > 1) {
            long long p = sieve.spf(mm);
            long long q = 1;
            while (mm % p == 0) {
                mm /= p;
                q *= p;
            }
            int cnt = table.count[q];
            if (cnt == 0) {
                solvable = false;
                break;
            }
            const uint32_t* part = table.data.data() + table.offset[q];
            long long inv;  // inverse of mod_acc mod q
            {
                long long a = mod_acc % q, g = q, x0 = 0, x1 = 1;
                while (a != 0) {
                    long long quo = g / a;
                    g -= quo * a;
                    std::swap(g, a);
                    x0 -= quo * x1;
                    std::swap(x0, x1);
                }
                inv = ((x0 % q) + q) % q;
            }
            next.clear();
            next.reserve(roots.size() * static_cast<size_t>(cnt));
            for (long long x : roots)
                for (int i = 0; i < cnt; ++i) {
                    long long k = (part[i] - x) % q * inv % q;
                    if (k < 0) k += q;
                    next.push_back(x + mod_acc * k);
                }
            std::swap(roots, next);
            mod_acc *= q;
        }
        if (!solvable) continue;
        std::sort(roots.begin(), roots.end());
        pairs_for_modulus(n, T, m, roots.data(), static_cast<int>(roots.size()),
                          include_b_zero, per_pair);
    }
}

void validate(long long n, long long T) {
    if (n == 0) throw std::invalid_argument("pairs: n must be nonzero");
    if (T < 1) throw std::invalid_argument("pairs: T must be positive");
    if (T > 100'000'000) throw std::invalid_argument("pairs: T too large for 64-bit walk");
}

}  // namespace

void enumerate_pairs(long long n, long long T,
                     const std::function<void(const PairRecord&)>& emit,
                     const EnumerateOptions& opts) {
    validate(n, T);
    SpfSieve sieve(T);
    PrimePowerRoots table(n, T, sieve);
    scan_moduli(n, T, 1, 1, sieve, table, opts.include_b_zero,
                [&](long long a, long long c, long long B) {
                    emit(PairRecord{a, c, 2 * B});
                });
}

std::vector<PairRecord> collect_pairs(long long n, long long T, const EnumerateOptions& opts) {
    std::vector<PairRecord> out;
    enumerate_pairs(n, T, [&](const PairRecord& r) { out.push_back(r); }, opts);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PairRecord> enumerate_pairs_bruteforce(long long n, long long T,
                                                   const EnumerateOptions& opts) {
    if (n == 0) throw std::invalid_argument("enumerate_pairs_bruteforce: n must be nonzero");
    if (T < 1 || T > 5000) throw std::invalid_argument("enumerate_pairs_bruteforce: need 1 <= T <= 5000");
    std::vector<PairRecord> out;
    for (long long a = -T; a <= T; ++a) {
        if (a == 0) continue;
        for (long long c = -T; c < a; ++c) {
            if (c == 0) continue;
            long long v = a * c + n;
            if (v < 0) continue;
            long long B = isqrt(v);
            if (B * B != v) continue;
            if (!opts.include_b_zero && B == 0) continue;
            out.push_back({a, c, 2 * B});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CountTable count_by_class(long long n, long long T, const ClassInventory& inventory,
                          const EnumerateOptions& opts) {
    if (inventory.n() != n) throw std::invalid_argument("count_by_class: inventory built for different n");
    validate(n, T);
    int workers = std::max(1, opts.workers);
    SpfSieve sieve(T);
    PrimePowerRoots table(n, T, sieve);

    auto worker_body = [&](long long first, std::vector<long long>& counts) {
        scan_moduli(n, T, first, workers, sieve, table, opts.include_b_zero,
                    [&](long long a, long long c, long long B) {
                        Form64 f{a, 2 * B, c};
                        assert((i128)f.b * f.b - 4 * (i128)f.a * f.c == 4 * (i128)n);
                        int idx = inventory.classify(f);
                        if (idx < 0)
                            throw std::logic_error("count_by_class: pair form missed the inventory");
                        ++counts[static_cast<size_t>(idx)];
                    });
    };

    std::vector<std::vector<long long>> partial(
        static_cast<size_t>(workers), std::vector<long long>(inventory.size(), 0));
    if (workers == 1) {
        worker_body(1, partial[0]);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    worker_body(w + 1, partial[static_cast<size_t>(w)]);
                } catch (...) {
                    errors[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    CountTable result;
    result.n = n;
    result.T = T;
    result.per_class.assign(inventory.size(), 0);
    for (const auto& part : partial)
        for (size_t i = 0; i < part.size(); ++i) result.per_class[i] += part[i];
    for (long long c : result.per_class) result.total += c;
    return result;
}

long long f_count(const QuadForm& Q, long long T, const EnumerateOptions& opts) {
    mpz_class disc = Q.discriminant();
    if (disc % 4 != 0) throw std::invalid_argument("f_count: discriminant must be 4n");
    mpz_class nz = disc / 4;
    if (!nz.fits_slong_p()) throw std::invalid_argument("f_count: n out of range");
    long long n = nz.get_si();
    if (n == 0) throw std::invalid_argument("f_count: degenerate form");
    ClassInventory inv = class_representatives(n);
    int idx = inv.classify(Q);
    if (idx < 0) throw std::logic_error("f_count: form missed the inventory");
    CountTable table = count_by_class(n, T, inv, opts);
    return table.per_class[static_cast<size_t>(idx)];
}

}  // namespace dnpairs
