#pragma once

namespace dnpairs {

/// Numerically integrated volume of the counting region at scale
/// M = T/|n|^{1/2}, with its ratio to the leading term.
struct RegionVolume {
    double M = 0;
    double value = 0;
    double ratio_to_leading = 0;  // -> 1 as M -> infinity
};

/// Definite region: integral of dx dy / y^2 over
///   sqrt(max(1-y^2, 0)) <= x <= sqrt(y(M-y)), 1/M <= y <= M.
/// Leading term M. Absolute quadrature error <= 1e-6 * M.
RegionVolume definite_volume(double M);

/// Indefinite region: (1/2) [ int_0^{u0} pi/2 du
///                           + int_{u0}^{M} arcsin((M-u)/sqrt(1+u^2)) du ],
/// u0 = (M^2-1)/(2M). Leading term M/2.
RegionVolume indefinite_volume(double M);

/// pi/4 + int_{1/2}^{1} arcsin((1-v)/v) dv; equals 1, evaluated to
/// absolute error <= 1e-9.
double arcsin_constant();

struct CovolumeConstants {
    double gamma_g;  // volume of SL2(Z) \ SL2(R): pi^2/6
};
CovolumeConstants covolume_constants();

/// pi / omega(dprime), covolume of the stabilizer lattice, definite case.
double definite_covolume(long long dprime);

/// 2 log(eps_d^{2/kappa(d)}) = (4/kappa(d)) * regulator(d), indefinite case.
double indefinite_covolume(long long d);

/// Per-class coefficient rebuilt as (stabilizer covolume) * (region volume
/// leading coefficient) / gamma_g, compared against predict_class (with
/// n = dprime, content 2) at relative tolerance 1e-9.
struct CoefficientReassembly {
    long long dprime = 0;
    double assembled = 0;
    double predicted = 0;
    bool ok = false;
};
CoefficientReassembly reassemble_class_coefficient(long long dprime);

}  // namespace dnpairs
