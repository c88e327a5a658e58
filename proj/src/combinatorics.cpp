#include "kkbounds/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace kkb {

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    // Each partial product is C(n-k+i, i), so the division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double binom_real(double x, int k) {
    require(k >= 1, "binom_real requires k >= 1");
    require(std::isfinite(x), "binom_real requires finite x");
    constexpr double exact_limit = 9007199254740992.0;  // 2^53
    if (x >= 0 && x < exact_limit && x == std::floor(x))
        return to_double(binomial(static_cast<std::int64_t>(x), k));
    double numerator = 1.0;
    for (int i = 0; i < k; ++i) numerator *= x - i;
    const double value = numerator / factorial(k);
    if (!std::isfinite(value)) throw std::overflow_error("binom_real overflow");
    return value;
}

Count turan_coefficient(std::int64_t n, int k, int r) {
    require(n >= 0, "turan_coefficient requires n >= 0");
    require(k >= 0, "turan_coefficient requires k >= 0");
    require(r >= 1, "turan_coefficient requires r >= 1");
    const std::int64_t p = n / r;
    const std::int64_t q = n - p * r;
    Count total = 0;
    const std::int64_t top = std::min<std::int64_t>(q, k);
    for (std::int64_t i = 0; i <= top; ++i) {
        const Count colors = binomial(r - i, k - i);
        if (colors == 0) continue;
        Count power = 1;
        for (std::int64_t e = 0; e < k - i; ++e) power *= p;
        total += binomial(q, i) * colors * power;
    }
    return total;
}

TuranGraph::TuranGraph(int n, int r) : n_(n), r_(r), part_(static_cast<std::size_t>(std::max(n, 0))) {
    require(n >= 0, "TuranGraph requires n >= 0");
    require(r >= 1, "TuranGraph requires r >= 1");
    for (int v = 0; v < n; ++v) part_[v] = v % r;
}

std::vector<int> TuranGraph::part_sizes() const {
    std::vector<int> sizes(r_, 0);
    for (int part : part_) ++sizes[part];
    return sizes;
}

Count turan_clique_count_oracle(int n, int k, int r, const OracleLimits& limits) {
    if (n > limits.max_vertices)
        throw LimitExceeded("turan_clique_count_oracle: n = " + std::to_string(n) + " exceeds oracle limit " +
                            std::to_string(limits.max_vertices));
    require(k >= 0, "turan_clique_count_oracle requires k >= 0");
    const TuranGraph graph(n, r);
    Count count = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (std::popcount(mask) != k) continue;
        bool clique = true;
        for (int u = 1; u <= n && clique; ++u) {
            if (!(mask >> (u - 1) & 1u)) continue;
            for (int v = u + 1; v <= n; ++v) {
                if ((mask >> (v - 1) & 1u) && !graph.adjacent(u, v)) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) ++count;
    }
    return count;
}

}  // namespace kkb
