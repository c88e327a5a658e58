#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kkbounds/count.hpp"

namespace kkb {

struct CascadeTerm {
    std::int64_t n;
    int level;

    friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// m = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_{k-s}, k-s) with
/// n_k > n_{k-1} > ... > n_{k-s} >= k-s > 0.
struct CascadeRep {
    int k = 0;
    std::vector<CascadeTerm> terms;

    std::int64_t leading() const { return terms.front().n; }
    std::string to_string() const;

    friend bool operator==(const CascadeRep&, const CascadeRep&) = default;
};

/// Face numbers (f_{-1}, f_0, ..., f_{d-1}). Entry i counts faces on i vertices.
class FaceVector {
public:
    /// Requires a leading 1; trailing zeros are trimmed, interior zeros rejected.
    explicit FaceVector(std::vector<Count> entries);
    FaceVector(std::initializer_list<long long> entries);

    /// Faces on i vertices; zero past the top level.
    Count faces_on(std::size_t i) const;
    /// Number of stored levels, including the empty face.
    std::size_t size() const { return entries_.size(); }
    int dimension() const { return static_cast<int>(entries_.size()) - 2; }
    const std::vector<Count>& entries() const { return entries_; }
    std::string to_string() const;

    friend bool operator==(const FaceVector&, const FaceVector&) = default;

private:
    std::vector<Count> entries_;
};

/// Outcome of a face-vector check. failing_k is the smallest k whose
/// inequality f_{k-2} >= bound(f_{k-1}) fails.
struct Validation {
    bool valid = true;
    std::optional<int> failing_k;

    explicit operator bool() const { return valid; }
};

CascadeRep cascade_decompose(const Count& m, int k);
Count cascade_evaluate(const CascadeRep& c);

/// Sharp lower bound on f_{p-1} given f_{k-1} = m.
Count shadow_bound(const Count& m, int k, int p);

Validation validate_face_vector(const FaceVector& f);

namespace detail {

/// Largest n >= lo with value(n) <= m, for value nondecreasing and
/// value(lo) <= m. Gallops from guess, then bisects.
template <class Value>
std::int64_t largest_at_most(const Value& value, const Count& m, std::int64_t lo,
                             std::int64_t guess) {
    constexpr std::int64_t ceiling = std::int64_t{1} << 62;
    if (guess < lo) guess = lo;
    std::int64_t hi;
    if (value(guess) <= m) {
        lo = guess;
        std::int64_t step = 1;
        for (;;) {
            if (lo > ceiling - step) throw std::overflow_error("cascade constant exceeds 2^62");
            hi = lo + step;
            if (value(hi) > m) break;
            lo = hi;
            step *= 2;
        }
    } else {
        hi = guess;
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (value(mid) <= m)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace detail

}  // namespace kkb
