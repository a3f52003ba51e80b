#pragma once

#include <cmath>

#include "dnpairs/bqf.hpp"

namespace dnpairs {

enum class Growth { linear, t_log_t };

/// Leading-term asymptotic: coefficient * T or coefficient * T * log T.
struct Prediction {
    Regime regime = Regime::definite;
    double coefficient = 0;
    Growth growth = Growth::linear;
    double value_at(double T) const {
        return growth == Growth::linear ? coefficient * T : coefficient * T * std::log(T);
    }
};

/// Per-class leading term for a class of content k (d' = 4n/k^2):
///   n < 0:            6 T / (omega(d') pi |n|^{1/2})
///   n > 0 nonsquare: 12 T log eps_{d'} / (kappa(d') pi^2 n^{1/2})
///   n a square:       6 T log T / (pi^2 n^{1/2})        (same for every class)
Prediction predict_class(long long n, long long k);

/// Total leading term over all classes (4n = d0 f^2 when 4n is nonsquare):
///   n < 0:           12 T h(d0) g(f) / (omega(d0) pi |n|^{1/2})
///   n > 0 nonsquare: 12 T log(eps_{d0}) h(d0) g(f) / (pi^2 n^{1/2})
///   n a square:      12 T log T / pi^2
/// where g(f) = prod_{p^e || f} (sigma1(p^e) - chi_{d0}(p) sigma1(p^{e-1})).
Prediction predict_total(long long n);

/// Class-summed per-class coefficients vs. the total coefficient, at
/// relative tolerance 1e-9. Requires 4n nonsquare. Optionally reports both
/// sides.
bool consistency_check(long long n, double* class_sum = nullptr, double* total = nullptr);

}  // namespace dnpairs
