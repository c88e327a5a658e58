#pragma once

#include <cstdint>
#include <vector>

#include "kkbounds/count.hpp"

namespace kkb {

struct OracleLimits {
    int max_vertices = 14;
    std::size_t max_faces = 20000;
};

/// Exact binomial coefficient, total on the integers: zero whenever
/// k < 0, n < 0 or k > n.
Count binomial(std::int64_t n, std::int64_t k);

/// Real-argument binomial x(x-1)...(x-k+1)/k!. Integral x >= 0 below 2^53
/// is evaluated exactly and rounded once.
double binom_real(double x, int k);

/// k! as a double (exact through 22!).
double factorial(int k);

/// Number of k-cliques in the Turán graph T(n, r).
Count turan_coefficient(std::int64_t n, int k, int r);

/// Complete r-partite graph on vertices 1..n with balanced parts.
class TuranGraph {
public:
    TuranGraph(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    /// Part index (0-based) of vertex v in 1..n.
    int part_of(int v) const { return part_[v - 1]; }
    bool adjacent(int u, int v) const { return u != v && part_of(u) != part_of(v); }
    std::vector<int> part_sizes() const;

private:
    int n_;
    int r_;
    std::vector<int> part_;
};

/// Brute-force k-clique count over TuranGraph(n, r) adjacency.
Count turan_clique_count_oracle(int n, int k, int r, const OracleLimits& limits = {});

}  // namespace kkb
