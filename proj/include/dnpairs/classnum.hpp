#pragma once

namespace dnpairs {

/// Order of the SL2(Z)-stabilizer of a primitive definite form of
/// discriminant d < 0: 4 for d = -4, 6 for d = -3, 2 otherwise.
int omega(long long d);

/// Class number h(d) of the quadratic order of discriminant d (d = 0,1 mod 4,
/// nonsquare). Counted from reduced forms: for d < 0 the Gauss-reduced
/// positive definite primitive forms; for d > 0 the rho-cycles divided by
/// kappa(d) (the cycle count is the narrow class number).
long long class_number(long long d);

/// Narrow class number h+(d) = kappa(d) * h(d) for d > 0 nonsquare; equals
/// the number of rho-cycles of reduced primitive forms.
long long narrow_class_number(long long d);

/// Exact check of the ring class number formula, cleared of denominators:
///   h(d0 f^2) * [O_{d0}^x : O_{d0 f^2}^x] * prod_{p|f} p
///     == h(d0) * f * prod_{p|f} (p - chi_{d0}(p)).
bool ring_class_check(long long d0, long long f);

}  // namespace dnpairs
