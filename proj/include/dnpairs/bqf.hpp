#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace dnpairs {

/// Integral binary quadratic form a x^2 + b xy + c y^2, identified with the
/// symmetric matrix [[a, b/2], [b/2, c]].
struct QuadForm {
    mpz_class a, b, c;

    QuadForm() = default;
    QuadForm(mpz_class a_, mpz_class b_, mpz_class c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
    QuadForm(long long a_, long long b_, long long c_)  // gmpxx lacks long long ctors
        : a(static_cast<long>(a_)), b(static_cast<long>(b_)), c(static_cast<long>(c_)) {
        static_assert(sizeof(long) == sizeof(long long));
    }

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    mpz_class content() const;  // gcd(|a|,|b|,|c|); 0 for the zero form
    QuadForm negated() const { return {-a, -b, -c}; }

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const;
    std::string str() const;  // "[a,b,c]"
};

/// Row-major 2x2 integer matrix [[p, q], [r, s]].
struct Mat2 {
    mpz_class p, q, r, s;
    mpz_class det() const { return p * s - q * r; }
    static Mat2 identity() { return {1, 0, 0, 1}; }
    bool operator==(const Mat2& o) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// The congruence action g.Q = g Q g^T for det(g) = 1.
QuadForm act(const Mat2& g, const QuadForm& Q);

/// The form [a, 2*sqrt(ac+n), c] attached to a D(n)-pair {a, c}.
/// Requires a > c, a and c nonzero, ac+n a perfect square (0 included).
QuadForm pair_form(long long a, long long c, long long n);

enum class Regime { definite, indefinite, split };

struct ReducedDefinite {
    QuadForm canonical;
    Mat2 g;  // act(g, input) == canonical
};

/// Gauss reduction of a definite form. Positive definite forms go to the
/// unique reduced representative (|b| <= a <= c, b >= 0 when |b| = a or
/// a = c); negative definite forms to minus the reduction of their negative.
ReducedDefinite reduce_definite(const QuadForm& Q);

/// Full rho-cycle of reduced forms equivalent to Q (disc > 0, nonsquare),
/// rotated to start at the least member. The cycle is a complete proper
/// equivalence invariant.
std::vector<QuadForm> indefinite_cycle(const QuadForm& Q);

/// Canonical representative [0, 2k, c], 0 <= c < 2k, for a form of square
/// discriminant (2k)^2 > 0.
QuadForm canonical_split(const QuadForm& Q);

/// Regime of a nondegenerate form; throws on discriminant 0.
Regime regime_of(const mpz_class& disc);

/// Canonical class representative: reduced form (definite, sign carried),
/// least cycle member (indefinite nonsquare), or [0,2k,c] (split).
QuadForm canonical_form(const QuadForm& Q);

/// Proper SL2(Z)-equivalence test.
bool equivalent(const QuadForm& Q1, const QuadForm& Q2);

/// Generator of infinite order of the SL2(Z)-stabilizer of a primitive
/// indefinite form of nonsquare discriminant d, built from the minimal
/// (t, s) with t^2 - d s^2 = 4. Satisfies act(result, Q) == Q.
Mat2 stabilizer_generator(const QuadForm& Q);

/// BFS orbit of Q under the standard SL2(Z) generators, truncated to forms
/// with max |coefficient| <= coeff_bound. Test ground truth only.
std::set<std::array<long long, 3>> orbit_oracle(const QuadForm& Q, long long coeff_bound);

// ---------------------------------------------------------------------------
// Class inventory for discriminant 4n.

struct ClassEntry {
    long long content = 1;   // k
    long long dprime = 0;    // 4n/k^2 (split: 4n)
    Regime regime = Regime::definite;
    int signature = 0;       // +1 / -1 for definite classes, 0 otherwise
    QuadForm canonical;      // scaled representative, content k
};

struct Form64 {
    long long a, b, c;
    bool operator==(const Form64&) const = default;
    auto operator<=>(const Form64&) const = default;
};

/// All proper equivalence classes of integral forms of discriminant 4n,
/// ordered by (content, canonical form). Built once, then shared read-only.
class ClassInventory {
public:
    long long n() const { return n_; }
    Regime regime() const { return regime_; }
    const std::vector<ClassEntry>& classes() const { return classes_; }
    size_t size() const { return classes_.size(); }

    /// Index of the class containing f (coefficients must fit in 64 bits).
    /// Returns -1 if f does not reduce into the inventory.
    int classify(Form64 f) const;
    int classify(const QuadForm& Q) const;

    friend ClassInventory class_representatives(long long n);

private:
    long long n_ = 0;
    long long split_two_k_ = 0;  // 2*sqrt(n) in the split regime
    Regime regime_ = Regime::definite;
    std::vector<ClassEntry> classes_;
    struct Form64Hash {
        size_t operator()(const Form64& f) const;
    };
    std::unordered_map<Form64, int, Form64Hash> lookup_;
};

ClassInventory class_representatives(long long n);

// ---------------------------------------------------------------------------
// Reduced-form scans (primitive forms of one discriminant).

/// Reduced positive definite primitive forms of discriminant d < 0; one per
/// class.
std::vector<Form64> reduced_definite_forms(long long d);

/// All reduced primitive forms of nonsquare discriminant d > 0, grouped into
/// rho-cycles (one group per proper class).
std::vector<std::vector<Form64>> reduced_indefinite_cycles(long long d);

// ---------------------------------------------------------------------------
// 64-bit fast path. Semantics match the mpz operations above; intermediates
// use 128-bit products. Used by the pair-counting pipeline.
namespace fast {

Form64 reduce_definite(Form64 f);
Form64 reduce_indefinite(Form64 f);  // some reduced member of the cycle
Form64 canonical_split(Form64 f, long long two_k);

}  // namespace fast

}  // namespace dnpairs
