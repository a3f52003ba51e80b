#include "dnpairs/classnum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "dnpairs/arith.hpp"
#include "dnpairs/bqf.hpp"
#include "dnpairs/pell.hpp"

namespace dnpairs {

namespace {

std::mutex h_mutex;

void check_discriminant(long long d) {
    if (d == 0) throw std::invalid_argument("class_number: zero discriminant");
    long long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("class_number: not a discriminant");
    if (d > 0 && is_square(d)) throw std::invalid_argument("class_number: square discriminant");
}

long long compute_h(long long d) {
    if (d < 0) return static_cast<long long>(reduced_definite_forms(d).size());
    long long cycles = static_cast<long long>(reduced_indefinite_cycles(d).size());
    int kappa = fundamental_unit(d).kappa;
    if (cycles % kappa != 0) throw std::logic_error("class_number: cycle count not divisible by kappa");
    return cycles / kappa;
}

}  // namespace

int omega(long long d) {
    if (d >= 0) throw std::invalid_argument("omega: discriminant must be negative");
    long long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("omega: not a discriminant");
    if (d == -3) return 6;
    if (d == -4) return 4;
    return 2;
}

long long class_number(long long d) {
    check_discriminant(d);
    static std::map<long long, long long> cache;
    std::lock_guard<std::mutex> lock(h_mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_h(d)).first;
    return it->second;
}

long long narrow_class_number(long long d) {
    if (d <= 0) throw std::invalid_argument("narrow_class_number: d must be positive");
    check_discriminant(d);
    return class_number(d) * fundamental_unit(d).kappa;
}

bool ring_class_check(long long d0, long long f) {
    if (f < 1) throw std::invalid_argument("ring_class_check: f must be positive");
    long long D = d0 * f * f;
    check_discriminant(D);
    long long lhs = class_number(D) * unit_index(d0, f);
    long long rhs = class_number(d0) * f;
    for (auto [p, e] : factorize(f).factors) {
        (void)e;
        lhs *= p;
        rhs *= p - kronecker(d0, p);
    }
    return lhs == rhs;
}

}  // namespace dnpairs
