#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kkbounds/cascade.hpp"
#include "kkbounds/count.hpp"

namespace kkb {

struct ColoredTerm {
    std::int64_t n;
    int level;
    int colors;

    friend bool operator==(const ColoredTerm&, const ColoredTerm&) = default;
};

/// m = C(n_k, k)_r + C(n_{k-1}, k-1)_{r-1} + ... with the gap condition
/// n_{k-i} - floor(n_{k-i}/(r-i)) > n_{k-i-1}.
struct ColoredCascadeRep {
    int k = 0;
    int r = 0;
    std::vector<ColoredTerm> terms;

    std::int64_t leading() const { return terms.front().n; }
    std::string to_string() const;

    friend bool operator==(const ColoredCascadeRep&, const ColoredCascadeRep&) = default;
};

ColoredCascadeRep colored_cascade_decompose(const Count& m, int k, int r);
Count colored_cascade_evaluate(const ColoredCascadeRep& c);

/// Lower bound on f_{p-1} of an r-colorable complex with f_{k-1} = m.
Count colored_shadow_bound(const Count& m, int k, int p, int r);

/// Valid iff f has no face on more than r vertices and every level
/// 2 <= k <= r satisfies the colored shadow inequality.
Validation validate_colored_face_vector(const FaceVector& f, int r);

}  // namespace kkb
