#pragma once

#include <functional>
#include <vector>

#include "dnpairs/bqf.hpp"

namespace dnpairs {

/// One D(n)-pair {a, c}, keyed by its larger element a. b = 2*sqrt(ac+n) is
/// the middle coefficient of the attached form [a, b, c].
struct PairRecord {
    long long a, c, b;
    int class_index = -1;  // set by count_by_class
    bool operator==(const PairRecord&) const = default;
    auto operator<=>(const PairRecord&) const = default;
};

struct EnumerateOptions {
    bool include_b_zero = true;  // count pairs with ac + n = 0
    int workers = 1;             // count_by_class parallelism
};

/// Per-class pair counts up to T.
struct CountTable {
    long long n = 0;
    long long T = 0;
    std::vector<long long> per_class;  // indexed like ClassInventory::classes()
    long long total = 0;
};

/// Stream every D(n)-pair {a, c} with a, c in [-T, T] \ {0}, each exactly
/// once from its larger element. Deterministic order: |a| ascending, a > 0
/// before a < 0, then b ascending.
void enumerate_pairs(long long n, long long T,
                     const std::function<void(const PairRecord&)>& emit,
                     const EnumerateOptions& opts = {});

/// Quadratic-time reference enumeration (sorted output).
std::vector<PairRecord> enumerate_pairs_bruteforce(long long n, long long T,
                                                   const EnumerateOptions& opts = {});

/// Convenience: collect enumerate_pairs output, sorted.
std::vector<PairRecord> collect_pairs(long long n, long long T,
                                      const EnumerateOptions& opts = {});

/// Count pairs per proper equivalence class. Every pair must classify into
/// the inventory; a miss is a fatal error. Deterministic for any worker
/// count.
CountTable count_by_class(long long n, long long T, const ClassInventory& inventory,
                          const EnumerateOptions& opts = {});

/// F_T count for the class of Q: forms [a,b,c] in the orbit with
/// |a|,|c| <= T, a > c, b >= 0 and a, c nonzero. Equals the D_T count of
/// Q's class by the pair <-> form bijection.
long long f_count(const QuadForm& Q, long long T, const EnumerateOptions& opts = {});

}  // namespace dnpairs
