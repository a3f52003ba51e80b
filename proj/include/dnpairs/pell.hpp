#pragma once

#include <gmpxx.h>

namespace dnpairs {

/// Fundamental unit data for the real quadratic order of discriminant d.
/// eps = (eps_x + eps_y*sqrt(d))/2 is the smallest unit > 1; (t, s) is the
/// minimal positive solution of t^2 - d s^2 = 4, and (t + s*sqrt(d))/2 =
/// eps^(2/kappa).
struct UnitData {
    long long d = 0;
    mpz_class t, s;
    mpz_class eps_x, eps_y;
    int norm = 0;        // (eps_x^2 - d*eps_y^2)/4, either +1 or -1
    int kappa = 0;       // 1 if norm == -1, else 2
    double regulator = 0;  // log(eps), >= 12 significant digits
};

/// Minimal positive (t, s) with t^2 - d s^2 = 4. d > 0 nonsquare, d = 0,1 mod 4.
std::pair<mpz_class, mpz_class> pell4_min(long long d);

/// Fundamental unit of the order of discriminant d (continued fraction of
/// (d mod 2 + sqrt(d))/2). Memoized; safe for concurrent reads.
const UnitData& fundamental_unit(long long d);

/// log(eps_d).
double regulator(long long d);

/// Unit group index [O_{d0}^x : O_{d0 f^2}^x]. For d0 < 0 this is
/// omega(d0)/omega(d0 f^2).
long long unit_index(long long d0, long long f);

}  // namespace dnpairs
