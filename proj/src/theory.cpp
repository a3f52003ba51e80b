#include "dnpairs/theory.hpp"

#include <stdexcept>

#include "dnpairs/arith.hpp"
#include "dnpairs/classnum.hpp"
#include "dnpairs/pell.hpp"

namespace dnpairs {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Prediction predict_class(long long n, long long k) {
    if (n == 0) throw std::invalid_argument("predict_class: n must be nonzero");
    if (k < 1 || (4 * n) % (k * k) != 0) throw std::invalid_argument("predict_class: invalid content");
    long long dp = 4 * n / (k * k);
    long long dm = ((dp % 4) + 4) % 4;
    if (dm != 0 && dm != 1) throw std::invalid_argument("predict_class: invalid content");
    Prediction p;
    if (n < 0) {
        p.regime = Regime::definite;
        p.growth = Growth::linear;
        p.coefficient = 6.0 / (omega(dp) * kPi * std::sqrt(static_cast<double>(-n)));
    } else if (!is_square(n)) {
        p.regime = Regime::indefinite;
        p.growth = Growth::linear;
        const UnitData& u = fundamental_unit(dp);
        p.coefficient = 12.0 * u.regulator / (u.kappa * kPi * kPi * std::sqrt(static_cast<double>(n)));
    } else {
        p.regime = Regime::split;
        p.growth = Growth::t_log_t;
        p.coefficient = 6.0 / (kPi * kPi * std::sqrt(static_cast<double>(n)));
    }
    return p;
}

Prediction predict_total(long long n) {
    if (n == 0) throw std::invalid_argument("predict_total: n must be nonzero");
    Prediction p;
    if (n > 0 && is_square(n)) {
        p.regime = Regime::split;
        p.growth = Growth::t_log_t;
        p.coefficient = 12.0 / (kPi * kPi);
        return p;
    }
    DiscriminantSplit split = split_discriminant(4 * n);
    double g = static_cast<double>(twisted_sigma(split.f, split.d0));
    double h = static_cast<double>(class_number(split.d0));
    p.growth = Growth::linear;
    if (n < 0) {
        p.regime = Regime::definite;
        p.coefficient = 12.0 * h * g / (omega(split.d0) * kPi * std::sqrt(static_cast<double>(-n)));
    } else {
        p.regime = Regime::indefinite;
        p.coefficient =
            12.0 * regulator(split.d0) * h * g / (kPi * kPi * std::sqrt(static_cast<double>(n)));
    }
    return p;
}

bool consistency_check(long long n, double* class_sum, double* total) {
    if (n == 0) throw std::invalid_argument("consistency_check: n must be nonzero");
    if (n > 0 && is_square(n)) throw std::invalid_argument("consistency_check: 4n must be nonsquare");
    ClassInventory inv = class_representatives(n);
    double sum = 0;
    for (const ClassEntry& e : inv.classes()) sum += predict_class(n, e.content).coefficient;
    double tot = predict_total(n).coefficient;
    if (class_sum) *class_sum = sum;
    if (total) *total = tot;
    return std::abs(sum - tot) <= 1e-9 * std::abs(tot);
}

}  // namespace dnpairs
