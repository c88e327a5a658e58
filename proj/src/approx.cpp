#include "kkbounds/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kkbounds/combinatorics.hpp"

namespace kkb {

namespace {

void require_levels(int k, int p, const char* op) {
    if (!(p >= 1 && p < k)) throw PreconditionError(std::string(op) + " requires 0 < p < k");
}

// (k! m)^{1/k}
double kth_root_scaled(const Count& m, int k) {
    if (k <= 20 && m < (Count(1) << 53)) {
        const double direct = std::pow(factorial(k) * to_double(m), 1.0 / k);
        if (std::isfinite(direct)) return direct;
    }
    return std::exp((std::lgamma(k + 1.0) + log_count(m)) / k);
}

// root^p / p!
double power_over_factorial(double root, int p) {
    if (p <= 20) {
        const double direct = std::pow(root, p) / factorial(p);
        if (std::isfinite(direct)) return direct;
    }
    return std::exp(p * std::log(root) - std::lgamma(p + 1.0));
}

int to_int(std::int64_t v) {
    if (v > std::numeric_limits<int>::max()) throw std::overflow_error("r exceeds int range");
    return static_cast<int>(v);
}

}  // namespace

double lovasz_x(const Count& m, int k) {
    require(m >= 1, "lovasz_x requires m >= 1");
    require(k >= 1, "lovasz_x requires k >= 1");
    const CascadeRep rep = cascade_decompose(m, k);
    if (rep.terms.size() == 1) return static_cast<double>(rep.leading());

    const double target = to_double(m);
    double lo = k - 1.0;
    // C(n,k) >= (n-k+1)^k / k!, so C(k-1 + (k! m)^{1/k}, k) >= m.
    double hi = k - 1.0 + kth_root_scaled(m, k) + k;
    while (binom_real(hi, k) < target) hi = 2.0 * hi;
    for (int iter = 0; iter < 4096; ++iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (binom_real(mid, k) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double err_lo = std::abs(binom_real(lo, k) - target);
    const double err_hi = std::abs(binom_real(hi, k) - target);
    return err_lo < err_hi ? lo : hi;
}

double lovasz_bound(const Count& m, int k, int p) {
    require_levels(k, p, "lovasz_bound");
    return binom_real(lovasz_x(m, k), p);
}

double withoutr_bound(const Count& m, int k, int p) {
    require_levels(k, p, "withoutr_bound");
    require(m >= 1, "withoutr_bound requires m >= 1");
    const double root = kth_root_scaled(m, k);
    return power_over_factorial(root, p) * std::pow(1.0 + (k - p) / (2.0 * root), p);
}

double noreasy_bound(const Count& m, int k, int p) {
    require_levels(k, p, "noreasy_bound");
    require(m >= 0, "noreasy_bound requires m >= 0");
    if (m == 0) return 0.0;
    return power_over_factorial(kth_root_scaled(m, k), p);
}

double colorapprox_bound(const Count& m, int k, int p, int r) {
    require_levels(k, p, "colorapprox_bound");
    require(k <= r, "colorapprox_bound requires k <= r");
    require(m >= 1, "colorapprox_bound requires m >= 1");
    const Count top = binomial(r, k);
    const double exponent = static_cast<double>(p) / k;
    const double num = to_double(m);
    const double den = to_double(top);
    const double coeff = to_double(binomial(r, p));
    if (std::isfinite(num) && std::isfinite(den) && std::isfinite(coeff))
        return coeff * std::pow(num / den, exponent);
    return std::exp(log_count(binomial(r, p)) + exponent * (log_count(m) - log_count(top)));
}

SymmetricChain symmetric_chain(const FaceVector& f) {
    SymmetricChain chain;
    for (std::size_t p = 1; p < f.size(); ++p) chain.values.push_back(kth_root_scaled(f.faces_on(p), static_cast<int>(p)));
    for (std::size_t i = 1; i < chain.values.size(); ++i)
        if (!(chain.values[i] < chain.values[i - 1])) chain.strictly_decreasing = false;
    return chain;
}

int best_r(const Count& m, int k) {
    require(m >= 1, "best_r requires m >= 1");
    require(k >= 1, "best_r requires k >= 1");
    const std::int64_t lead = cascade_decompose(m, k).leading();
    // No r below n_k - 1 can satisfy the condition.
    std::int64_t r = std::max<std::int64_t>(k, lead - 1);
    while (m > binomial(r, k) + binomial(r - 1, k - 1)) ++r;
    return to_int(r);
}

int flag_r(const Count& m, int k) {
    require(m >= 1, "flag_r requires m >= 1");
    require(k >= 1, "flag_r requires k >= 1");
    const std::int64_t lead = cascade_decompose(m, k).leading();
    std::int64_t r = std::max<std::int64_t>(k, lead - 1);
    while (m >= binomial(r + 1, k)) ++r;
    return to_int(r);
}

BoundReport make_bound_report(const Count& m, int k, int p, std::optional<int> r) {
    require_levels(k, p, "bound report");
    require(m >= 1, "bound report requires m >= 1");
    if (r) require(*r >= k, "bound report requires k <= r");
    BoundReport report;
    report.m = m;
    report.k = k;
    report.p = p;
    report.kk_exact = shadow_bound(m, k, p);
    report.lovasz_x = lovasz_x(m, k);
    report.lovasz = binom_real(report.lovasz_x, p);
    report.withoutr = withoutr_bound(m, k, p);
    report.noreasy = noreasy_bound(m, k, p);
    const int colored_r = r ? *r : best_r(m, k);
    report.colored = RBound{colored_r, colorapprox_bound(m, k, p, colored_r)};
    const int fr = flag_r(m, k);
    report.flag = RBound{fr, colorapprox_bound(m, k, p, fr)};
    return report;
}

}  // namespace kkb
