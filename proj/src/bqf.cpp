#include "dnpairs/bqf.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dnpairs/arith.hpp"
#include "dnpairs/pell.hpp"

namespace dnpairs {

namespace {

using i128 = __int128;

constexpr long long kReduceCap = 1'000'000;

long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of 64-bit range");
    return z.get_si();
}

long long llgcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// g = gcd(a,b) = x*a + y*b
void xgcd(long long a, long long b, long long& g, long long& x, long long& y) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    g = a;
    x = x0;
    y = y0;
}

struct Acted128 {
    i128 a, b, c;
};

// [[p,q],[r,s]] . (a,b,c), 128-bit intermediates.
Acted128 act128(long long p, long long q, long long r, long long s, Form64 f) {
    i128 a = f.a, b = f.b, c = f.c;
    return {a * p * p + b * p * q + c * q * q,
            2 * a * p * r + b * ((i128)p * s + (i128)q * r) + 2 * c * q * s,
            a * r * r + b * r * s + c * s * s};
}

long long down_ll(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string(what) + ": 64-bit overflow");
    return static_cast<long long>(v);
}

Form64 to_form64(const QuadForm& Q, const char* what) {
    return {to_ll(Q.a, what), to_ll(Q.b, what), to_ll(Q.c, what)};
}

}  // namespace

mpz_class QuadForm::content() const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

bool QuadForm::operator<(const QuadForm& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

std::string QuadForm::str() const {
    std::ostringstream os;
    os << "[" << a << "," << b << "," << c << "]";
    return os.str();
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
            x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

QuadForm act(const Mat2& g, const QuadForm& Q) {
    return {Q.a * g.p * g.p + Q.b * g.p * g.q + Q.c * g.q * g.q,
            2 * Q.a * g.p * g.r + Q.b * (g.p * g.s + g.q * g.r) + 2 * Q.c * g.q * g.s,
            Q.a * g.r * g.r + Q.b * g.r * g.s + Q.c * g.s * g.s};
}

QuadForm pair_form(long long a, long long c, long long n) {
    if (a == 0 || c == 0) throw std::invalid_argument("pair_form: elements must be nonzero");
    if (a <= c) throw std::invalid_argument("pair_form: requires a > c");
    i128 v = (i128)a * c + n;
    if (v < 0) throw std::invalid_argument("pair_form: ac+n is negative");
    long long vv = down_ll(v, "pair_form");
    long long B = isqrt(vv);
    if (B * B != vv) throw std::invalid_argument("pair_form: ac+n is not a perfect square");
    return QuadForm(a, 2 * B, c);
}

Regime regime_of(const mpz_class& disc) {
    if (disc == 0) throw std::invalid_argument("degenerate form (discriminant 0)");
    if (disc < 0) return Regime::definite;
    return is_square(disc) ? Regime::split : Regime::indefinite;
}

ReducedDefinite reduce_definite(const QuadForm& Q) {
    if (Q.discriminant() >= 0) throw std::invalid_argument("reduce_definite: form not definite");
    bool neg = Q.a < 0;
    QuadForm f = neg ? Q.negated() : Q;
    Mat2 g = Mat2::identity();
    const Mat2 S{0, -1, 1, 0};
    for (long long iter = 0;; ++iter) {
        if (iter > kReduceCap) throw std::runtime_error("reduce_definite: iteration cap exceeded");
        if (f.c < f.a || (f.c == f.a && f.b < 0)) {
            f = QuadForm(f.c, -f.b, f.a);
            g = S * g;
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            // translate b into (-a, a]
            mpz_class r = f.a - f.b;
            mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mpz_class(2 * f.a).get_mpz_t());
            mpz_class nb = f.a - r;
            mpz_class k = (nb - f.b) / (2 * f.a);
            mpz_class nc = (nb * nb - f.discriminant()) / (4 * f.a);
            f = QuadForm(f.a, nb, nc);
            g = Mat2{1, 0, k, 1} * g;
            continue;
        }
        break;
    }
    return {neg ? f.negated() : f, g};
}

namespace fast {

Form64 reduce_definite(Form64 f) {
    if (f.a < 0) {
        Form64 r = reduce_definite({-f.a, -f.b, -f.c});
        return {-r.a, -r.b, -r.c};
    }
    i128 D = (i128)f.b * f.b - 4 * (i128)f.a * f.c;
    for (long long iter = 0;; ++iter) {
        if (iter > kReduceCap) throw std::runtime_error("reduce_definite: iteration cap exceeded");
        if (f.c < f.a || (f.c == f.a && f.b < 0)) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            long long m2 = 2 * f.a;
            long long r = (f.a - f.b) % m2;
            if (r < 0) r += m2;
            long long nb = f.a - r;
            f = {f.a, nb, down_ll(((i128)nb * nb - D) / (4 * (i128)f.a), "reduce_definite")};
            continue;
        }
        return f;
    }
}

namespace {

bool is_reduced_indef(Form64 f, long long d) {
    if (f.b <= 0) return false;
    if ((i128)f.b * f.b >= d) return false;
    long long a2 = 2 * (f.a < 0 ? -f.a : f.a);
    if ((i128)(a2 + f.b) * (a2 + f.b) <= d) return false;  // need sqrt(d) < 2|a| + b
    if (a2 > f.b && (i128)(a2 - f.b) * (a2 - f.b) >= d) return false;  // need 2|a| - b < sqrt(d)
    return true;
}

Form64 rho_indef(Form64 f, long long d, long long sq) {
    long long c2 = f.c < 0 ? -f.c : f.c;
    long long twoc = 2 * c2;
    long long base = c2 > sq ? c2 : sq;
    long long r = (base + f.b) % twoc;
    if (r < 0) r += twoc;
    long long nb = base - r;
    long long nc = down_ll(((i128)nb * nb - d) / (4 * (i128)f.c), "rho_indef");
    return {f.c, nb, nc};
}

}  // namespace

Form64 reduce_indefinite(Form64 f) {
    i128 D = (i128)f.b * f.b - 4 * (i128)f.a * f.c;
    long long d = down_ll(D, "reduce_indefinite");
    if (d <= 0) throw std::invalid_argument("reduce_indefinite: discriminant not positive");
    long long sq = isqrt(d);
    if (sq * sq == d) throw std::invalid_argument("reduce_indefinite: square discriminant");
    for (long long iter = 0;; ++iter) {
        if (iter > kReduceCap) throw std::runtime_error("reduce_indefinite: iteration cap exceeded");
        if (is_reduced_indef(f, d)) return f;
        f = rho_indef(f, d, sq);
    }
}

Form64 canonical_split(Form64 f, long long two_k) {
    if (two_k <= 0) throw std::invalid_argument("canonical_split: bad discriminant root");
    long long x, y;
    auto zero_vector = [&](bool first) {
        if (f.a != 0) {
            x = (first ? two_k : -two_k) - f.b;
            y = 2 * f.a;
        } else if (first) {
            x = 1;
            y = 0;
        } else {
            x = -f.c;
            y = f.b;
        }
        long long g = llgcd(x, y);
        x /= g;
        y /= g;
    };
    auto transformed = [&]() {
        long long g, w, mu;
        xgcd(x, y, g, w, mu);  // w*x + mu*y == 1
        return act128(x, y, -mu, w, f);
    };
    zero_vector(true);
    Acted128 F = transformed();
    if (F.b == -(i128)two_k) {
        zero_vector(false);
        F = transformed();
    }
    if (F.a != 0 || F.b != (i128)two_k)
        throw std::logic_error("canonical_split: normalization failed");
    i128 c = F.c % two_k;
    if (c < 0) c += two_k;
    return {0, two_k, static_cast<long long>(c)};
}

}  // namespace fast

std::vector<QuadForm> indefinite_cycle(const QuadForm& Q) {
    mpz_class D = Q.discriminant();
    if (D <= 0 || is_square(D)) throw std::invalid_argument("indefinite_cycle: need positive nonsquare discriminant");
    long long d = to_ll(D, "indefinite_cycle");
    long long sq = isqrt(d);
    Form64 start = fast::reduce_indefinite(to_form64(Q, "indefinite_cycle"));
    std::vector<QuadForm> cycle;
    Form64 f = start;
    for (long long iter = 0;; ++iter) {
        if (iter > kReduceCap) throw std::runtime_error("indefinite_cycle: cycle cap exceeded");
        cycle.emplace_back(f.a, f.b, f.c);
        f = fast::rho_indef(f, d, sq);
        if (f == start) break;
    }
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    return cycle;
}

QuadForm canonical_split(const QuadForm& Q) {
    mpz_class D = Q.discriminant();
    if (D <= 0 || !is_square(D)) throw std::invalid_argument("canonical_split: need positive square discriminant");
    mpz_class root = isqrt(D);
    if (root % 2 != 0) throw std::invalid_argument("canonical_split: discriminant not of the form (2k)^2");
    Form64 r = fast::canonical_split(to_form64(Q, "canonical_split"), to_ll(root, "canonical_split"));
    return {r.a, r.b, r.c};
}

QuadForm canonical_form(const QuadForm& Q) {
    switch (regime_of(Q.discriminant())) {
        case Regime::definite:
            return reduce_definite(Q).canonical;
        case Regime::indefinite:
            return indefinite_cycle(Q).front();
        case Regime::split:
            return canonical_split(Q);
    }
    throw std::logic_error("canonical_form: unreachable");
}

bool equivalent(const QuadForm& Q1, const QuadForm& Q2) {
    mpz_class d1 = Q1.discriminant(), d2 = Q2.discriminant();
    if (d1 == 0 || d2 == 0) throw std::invalid_argument("equivalent: degenerate form");
    if (d1 != d2) return false;
    return canonical_form(Q1) == canonical_form(Q2);
}

Mat2 stabilizer_generator(const QuadForm& Q) {
    mpz_class D = Q.discriminant();
    if (D <= 0 || is_square(D)) throw std::invalid_argument("stabilizer_generator: need positive nonsquare discriminant");
    if (Q.content() != 1) throw std::invalid_argument("stabilizer_generator: form must be primitive");
    auto [t, s] = pell4_min(to_ll(D, "stabilizer_generator"));
    // Transposed relative to the classical substitution-action matrix so that
    // act(T0, Q) == Q holds for the congruence action g Q g^T.
    return {(t - Q.b * s) / 2, Q.a * s, -Q.c * s, (t + Q.b * s) / 2};
}

std::set<std::array<long long, 3>> orbit_oracle(const QuadForm& Q, long long coeff_bound) {
    Form64 q0 = to_form64(Q, "orbit_oracle");
    auto in_bound = [&](Form64 f) {
        auto ab = [](long long v) { return v < 0 ? -v : v; };
        return ab(f.a) <= coeff_bound && ab(f.b) <= coeff_bound && ab(f.c) <= coeff_bound;
    };
    std::set<std::array<long long, 3>> seen;
    if (!in_bound(q0)) throw std::invalid_argument("orbit_oracle: start form exceeds bound");
    std::deque<Form64> queue{q0};
    seen.insert({q0.a, q0.b, q0.c});
    while (!queue.empty()) {
        Form64 f = queue.front();
        queue.pop_front();
        Form64 nbrs[3] = {
            {f.c, -f.b, f.a},                        // S (self-inverse as an action)
            {f.a + f.b + f.c, f.b + 2 * f.c, f.c},   // T
            {f.a - f.b + f.c, f.b - 2 * f.c, f.c},   // T^{-1}
        };
        for (Form64 g : nbrs) {
            if (!in_bound(g)) continue;
            if (seen.insert({g.a, g.b, g.c}).second) queue.push_back(g);
        }
    }
    return seen;
}

std::vector<Form64> reduced_definite_forms(long long d) {
    if (d >= 0) throw std::invalid_argument("reduced_definite_forms: need negative discriminant");
    long long dm = ((d % 4) + 4) % 4;
    if (dm != 0 && dm != 1) throw std::invalid_argument("reduced_definite_forms: not a discriminant");
    std::vector<Form64> forms;
    for (long long a = 1; 3 * a * a <= -d; ++a) {
        for (long long b = -a; b <= a; ++b) {
            if (((b - d) % 2) != 0) continue;  // b = d (mod 2)
            long long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;  // tie-break: b >= 0
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

std::vector<std::vector<Form64>> reduced_indefinite_cycles(long long d) {
    if (d <= 0 || is_square(d))
        throw std::invalid_argument("reduced_indefinite_cycles: need positive nonsquare discriminant");
    long long dm = d % 4;
    if (dm != 0 && dm != 1) throw std::invalid_argument("reduced_indefinite_cycles: not a discriminant");
    long long sq = isqrt(d);
    std::set<Form64> pool;
    for (long long b = (d % 2 == 0) ? 2 : 1; b <= sq; b += 2) {
        long long N4 = d - b * b;
        if (N4 % 4 != 0) continue;
        long long N = N4 / 4;  // -ac
        for (long long a = 1; a * a <= N; ++a) {
            if (N % a != 0) continue;
            for (long long aa : {a, N / a}) {
                // reduced: sqrt(d) - b < 2*aa < sqrt(d) + b
                if ((2 * aa + b) * (2 * aa + b) <= d) continue;
                if (2 * aa > b && (2 * aa - b) * (2 * aa - b) >= d) continue;
                long long cc = N / aa;
                if (std::gcd(std::gcd(aa, b), cc) != 1) continue;
                pool.insert({aa, b, -cc});
                pool.insert({-aa, b, cc});
                if (a == N / a) break;
            }
        }
    }
    std::vector<std::vector<Form64>> cycles;
    while (!pool.empty()) {
        Form64 start = *pool.begin();
        std::vector<Form64> cycle;
        Form64 f = start;
        do {
            auto it = pool.find(f);
            if (it == pool.end()) throw std::logic_error("reduced_indefinite_cycles: rho left the reduced pool");
            pool.erase(it);
            cycle.push_back(f);
            f = fast::rho_indef(f, d, sq);
        } while (!(f == start));
        auto least = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), least, cycle.end());
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return cycles;
}

size_t ClassInventory::Form64Hash::operator()(const Form64& f) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t v : {(uint64_t)f.a, (uint64_t)f.b, (uint64_t)f.c}) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<size_t>(h);
}

int ClassInventory::classify(Form64 f) const {
    Form64 key;
    switch (regime_) {
        case Regime::definite:
            key = fast::reduce_definite(f);
            break;
        case Regime::indefinite:
            key = fast::reduce_indefinite(f);
            break;
        case Regime::split:
            key = fast::canonical_split(f, split_two_k_);
            break;
    }
    auto it = lookup_.find(key);
    return it == lookup_.end() ? -1 : it->second;
}

int ClassInventory::classify(const QuadForm& Q) const {
    return classify(to_form64(Q, "classify"));
}

ClassInventory class_representatives(long long n) {
    if (n == 0) throw std::invalid_argument("class_representatives: n must be nonzero");
    ClassInventory inv;
    inv.n_ = n;
    long long fourn = 4 * n;
    if (n > 0 && is_square(n)) {
        inv.regime_ = Regime::split;
        long long two_k = 2 * isqrt(n);
        inv.split_two_k_ = two_k;
        for (long long c = 0; c < two_k; ++c) {
            ClassEntry e;
            e.content = std::gcd(two_k, c);
            e.dprime = fourn;
            e.regime = Regime::split;
            e.canonical = QuadForm(0, two_k, c);
            inv.classes_.push_back(std::move(e));
        }
        std::sort(inv.classes_.begin(), inv.classes_.end(), [](const ClassEntry& x, const ClassEntry& y) {
            if (x.content != y.content) return x.content < y.content;
            return x.canonical < y.canonical;
        });
        for (int i = 0; i < (int)inv.classes_.size(); ++i)
            inv.lookup_.emplace(Form64{0, two_k, to_ll(inv.classes_[i].canonical.c, "inventory")}, i);
        return inv;
    }
    inv.regime_ = n < 0 ? Regime::definite : Regime::indefinite;
    struct Pending {
        ClassEntry entry;
        std::vector<Form64> members;  // all lookup keys, scaled
    };
    std::vector<Pending> pending;
    for (long long k = 1; k * k <= (fourn < 0 ? -fourn : fourn); ++k) {
        if (fourn % (k * k) != 0) continue;
        long long dp = fourn / (k * k);
        long long dm = ((dp % 4) + 4) % 4;
        if (dm != 0 && dm != 1) continue;
        if (n < 0) {
            for (Form64 f : reduced_definite_forms(dp)) {
                Form64 pos{k * f.a, k * f.b, k * f.c};
                Form64 neg{-pos.a, -pos.b, -pos.c};
                pending.push_back({{k, dp, Regime::definite, +1, QuadForm(pos.a, pos.b, pos.c)}, {pos}});
                pending.push_back({{k, dp, Regime::definite, -1, QuadForm(neg.a, neg.b, neg.c)}, {neg}});
            }
        } else {
            for (const auto& cyc : reduced_indefinite_cycles(dp)) {
                Pending p;
                p.entry = {k, dp, Regime::indefinite, 0, QuadForm()};
                for (Form64 f : cyc) p.members.push_back({k * f.a, k * f.b, k * f.c});
                Form64 least = *std::min_element(p.members.begin(), p.members.end());
                p.entry.canonical = QuadForm(least.a, least.b, least.c);
                pending.push_back(std::move(p));
            }
        }
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) {
        if (x.entry.content != y.entry.content) return x.entry.content < y.entry.content;
        return x.entry.canonical < y.entry.canonical;
    });
    for (auto& p : pending) {
        int idx = static_cast<int>(inv.classes_.size());
        inv.classes_.push_back(std::move(p.entry));
        for (Form64 f : p.members) inv.lookup_.emplace(f, idx);
    }
    return inv;
}

}  // namespace dnpairs
