#pragma once

#include <optional>
#include <vector>

#include "kkbounds/cascade.hpp"
#include "kkbounds/count.hpp"

namespace kkb {

/// The unique x >= k-1 with binom_real(x, k) = m. Integral roots are
/// returned exactly.
double lovasz_x(const Count& m, int k);

double lovasz_bound(const Count& m, int k, int p);

/// (k!)^{p/k}/p! * (1 + (k-p) / (2 (k! m)^{1/k}))^p * m^{p/k}
double withoutr_bound(const Count& m, int k, int p);

/// (k!)^{p/k}/p! * m^{p/k}; zero at m = 0.
double noreasy_bound(const Count& m, int k, int p);

/// C(r,p) * C(r,k)^{-p/k} * m^{p/k}. Valid for r-colorable complexes, and for
/// any complex when m <= C(r,k) + C(r-1,k-1), and for flag complexes when
/// m < C(r+1,k).
double colorapprox_bound(const Count& m, int k, int p, int r);

struct SymmetricChain {
    std::vector<double> values;  // (p! f_{p-1})^{1/p}, p = 1..dim+1
    bool strictly_decreasing = true;
};

SymmetricChain symmetric_chain(const FaceVector& f);

/// Smallest r >= k with m <= C(r,k) + C(r-1,k-1).
int best_r(const Count& m, int k);

/// Smallest r >= k with m < C(r+1,k).
int flag_r(const Count& m, int k);

struct RBound {
    int r;
    double value;
};

struct BoundReport {
    Count m;
    int k = 0;
    int p = 0;
    Count kk_exact;
    double lovasz = 0;
    double lovasz_x = 0;
    double withoutr = 0;
    double noreasy = 0;
    /// colorapprox at the caller's r, or at best_r when none was given.
    std::optional<RBound> colored;
    /// colorapprox at flag_r; applies to flag complexes.
    std::optional<RBound> flag;
};

BoundReport make_bound_report(const Count& m, int k, int p, std::optional<int> r = {});

}  // namespace kkb
