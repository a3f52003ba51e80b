#include "dnpairs/pell.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "dnpairs/arith.hpp"

namespace dnpairs {

namespace {

constexpr long long kMaxCfSteps = 4'000'000;

// log of a positive mpz, accurate to double precision.
double log_mpz(const mpz_class& z) {
    signed long int exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

// log((x + y*sqrt(d))/2) for x, y >= 1. Scales by 2^128 before the integer
// square root so small units keep full precision.
double log_unit(const mpz_class& x, const mpz_class& y, long long d) {
    constexpr int shift = 128;
    mpz_class dz(static_cast<long>(d));
    mpz_class scaled = (x << shift) + isqrt(mpz_class((y * y * dz) << (2 * shift)));
    return log_mpz(scaled) - (shift + 1) * M_LN2;
}

UnitData compute_unit(long long d) {
    if (d <= 0) throw std::invalid_argument("fundamental_unit: d must be positive");
    long long dm4 = d % 4;
    if (dm4 != 0 && dm4 != 1) throw std::invalid_argument("fundamental_unit: d != 0,1 mod 4");
    if (is_square(d)) throw std::invalid_argument("fundamental_unit: square discriminant");

    long long sq = isqrt(d);
    long long sigma = d % 2;
    // Continued fraction of (sigma + sqrt(d))/2; the complete quotients are
    // (P_i + sqrt(d))/Q_i.
    long long P = sigma, Q = 2;
    long long a0 = (P + sq) / Q;
    mpz_class q_prev = 0, q_cur = 1;  // q_{-1}, q_0
    long long a = a0;
    long long P1 = 0, Q1 = 0;
    mpz_class q_lm1, q_l;
    for (long long i = 0;; ++i) {
        if (i > kMaxCfSteps) throw std::runtime_error("fundamental_unit: period cap exceeded");
        long long Pn = a * Q - P;
        long long Qn = (d - Pn * Pn) / Q;
        if (i == 0) {
            P1 = Pn;
            Q1 = Qn;
        } else if (Pn == P1 && Qn == Q1) {
            q_lm1 = q_prev;
            q_l = q_cur;
            break;
        }
        P = Pn;
        Q = Qn;
        a = (P + sq) / Q;
        mpz_class q_next = static_cast<long>(a) * q_cur + q_prev;
        q_prev = q_cur;
        q_cur = q_next;
    }

    // eps = q_{l-1} * omega0 + (q_l - a0 * q_{l-1}) = (X + Y*sqrt(d))/2.
    UnitData u;
    u.d = d;
    u.eps_y = q_lm1;
    u.eps_x = 2 * (q_l - static_cast<long>(a0) * q_lm1) + static_cast<long>(sigma) * q_lm1;
    if (u.eps_x <= 0 || u.eps_y <= 0)
        throw std::logic_error("fundamental_unit: nonpositive coordinates");
    mpz_class nrm4 = u.eps_x * u.eps_x - static_cast<long>(d) * u.eps_y * u.eps_y;
    if (nrm4 == 4)
        u.norm = 1;
    else if (nrm4 == -4)
        u.norm = -1;
    else
        throw std::logic_error("fundamental_unit: norm not +-1");
    u.kappa = (u.norm == -1) ? 1 : 2;
    if (u.norm == 1) {
        u.t = u.eps_x;
        u.s = u.eps_y;
    } else {
        // eps^2 = ((X^2 + d Y^2)/2 + X Y sqrt(d)) / 2
        u.t = (u.eps_x * u.eps_x + static_cast<long>(d) * u.eps_y * u.eps_y) / 2;
        u.s = u.eps_x * u.eps_y;
    }
    u.regulator = log_unit(u.eps_x, u.eps_y, d);
    return u;
}

int omega_neg(long long d) {
    if (d == -3) return 6;
    if (d == -4) return 4;
    return 2;
}

std::map<long long, UnitData>& unit_cache() {
    static std::map<long long, UnitData> cache;
    return cache;
}
std::mutex cache_mutex;

}  // namespace

const UnitData& fundamental_unit(long long d) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = unit_cache();
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_unit(d)).first;
    return it->second;
}

std::pair<mpz_class, mpz_class> pell4_min(long long d) {
    const UnitData& u = fundamental_unit(d);
    return {u.t, u.s};
}

double regulator(long long d) { return fundamental_unit(d).regulator; }

long long unit_index(long long d0, long long f) {
    if (f < 1) throw std::invalid_argument("unit_index: f must be positive");
    if (f == 1) return 1;
    if (d0 < 0) {
        long long D = d0 * f * f;
        return omega_neg(d0) / omega_neg(D);
    }
    const UnitData& u = fundamental_unit(d0);
    // Least j >= 1 with eps^j = (X_j + Y_j sqrt(d0))/2 lying in O_{d0 f^2},
    // i.e. f | Y_j.
    mpz_class xj = u.eps_x, yj = u.eps_y;
    long fl = static_cast<long>(f);
    for (long long j = 1; j <= 10'000'000; ++j) {
        if (yj % fl == 0) return j;
        mpz_class xn = (xj * u.eps_x + static_cast<long>(d0) * yj * u.eps_y) / 2;
        mpz_class yn = (xj * u.eps_y + yj * u.eps_x) / 2;
        xj = xn;
        yj = yn;
    }
    throw std::runtime_error("unit_index: iteration cap exceeded");
}

}  // namespace dnpairs
