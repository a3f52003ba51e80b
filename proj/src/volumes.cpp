#include "dnpairs/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dnpairs/arith.hpp"
#include "dnpairs/classnum.hpp"
#include "dnpairs/pell.hpp"
#include "dnpairs/quadrature.hpp"
#include "dnpairs/theory.hpp"

namespace dnpairs {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamped_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }
}  // namespace

RegionVolume definite_volume(double M) {
    if (M <= 1) throw std::invalid_argument("definite_volume: need M > 1");
    auto upper = [&](double y) { return std::sqrt(std::max(y * (M - y), 0.0)); };
    auto integrand = [&](double y) {
        double lower = y < 1 ? std::sqrt(1 - y * y) : 0.0;
        return std::max(upper(y) - lower, 0.0) / (y * y);
    };
    double tol = 1e-6 * M;
    // Split at the kink y = 1; substitute y = M - w^2 on [1, M] to tame the
    // square-root edge at y = M.
    double left = integrate(integrand, 1.0 / M, 1.0, tol / 2);
    double wmax = std::sqrt(M - 1);
    double right = integrate(
        [&](double w) {
            double y = M - w * w;
            return integrand(y) * 2 * w;
        },
        0.0, wmax, tol / 2);
    RegionVolume v;
    v.M = M;
    v.value = left + right;
    v.ratio_to_leading = v.value / M;
    return v;
}

RegionVolume indefinite_volume(double M) {
    if (M <= 1) throw std::invalid_argument("indefinite_volume: need M > 1");
    double u0 = (M * M - 1) / (2 * M);
    double tol = 1e-6 * M;
    // substitute u = u0 + w^2: arcsin hits pi/2 with a square-root edge at u0
    double wmax = std::sqrt(M - u0);
    double tail = integrate(
        [&](double w) {
            double u = u0 + w * w;
            return clamped_asin((M - u) / std::sqrt(1 + u * u)) * 2 * w;
        },
        0.0, wmax, tol);
    RegionVolume v;
    v.M = M;
    v.value = 0.5 * (kPi / 2 * u0 + tail);
    v.ratio_to_leading = v.value / (M / 2);
    return v;
}

double arcsin_constant() {
    // substitute v = 1/2 + w^2 to smooth the arcsin'(1) edge at v = 1/2
    double wmax = std::sqrt(0.5);
    double second = integrate(
        [&](double w) {
            double v = 0.5 + w * w;
            return clamped_asin((1 - v) / v) * 2 * w;
        },
        0.0, wmax, 1e-12);
    return kPi / 4 + second;
}

CovolumeConstants covolume_constants() { return {kPi * kPi / 6}; }

double definite_covolume(long long dprime) { return kPi / omega(dprime); }

double indefinite_covolume(long long d) {
    const UnitData& u = fundamental_unit(d);
    return 4.0 / u.kappa * u.regulator;
}

CoefficientReassembly reassemble_class_coefficient(long long dprime) {
    long long dm = ((dprime % 4) + 4) % 4;
    if (dprime == 0 || (dm != 0 && dm != 1))
        throw std::invalid_argument("reassemble_class_coefficient: not a discriminant");
    if (dprime > 0 && is_square(dprime))
        throw std::invalid_argument("reassemble_class_coefficient: square discriminant");
    CoefficientReassembly r;
    r.dprime = dprime;
    double gamma_g = covolume_constants().gamma_g;
    double root = std::sqrt(std::abs(static_cast<double>(dprime)));
    // Region volume leading coefficients (as multiples of T): T/|n|^{1/2}
    // definite, T/(2 n^{1/2}) indefinite; here n = dprime (content 2).
    if (dprime < 0)
        r.assembled = definite_covolume(dprime) * (1.0 / root) / gamma_g;
    else
        r.assembled = indefinite_covolume(dprime) * (1.0 / (2 * root)) / gamma_g;
    r.predicted = predict_class(dprime, 2).coefficient;
    r.ok = std::abs(r.assembled - r.predicted) <= 1e-9 * std::abs(r.predicted);
    return r;
}

}  // namespace dnpairs
