#include "kkbounds/colored.hpp"

#include <sstream>

#include "kkbounds/combinatorics.hpp"

namespace kkb {

std::string ColoredCascadeRep::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << '+';
        out << "C(" << terms[i].n << ',' << terms[i].level << ")_" << terms[i].colors;
    }
    return out.str();
}

ColoredCascadeRep colored_cascade_decompose(const Count& m, int k, int r) {
    require(m >= 1, "colored_cascade_decompose requires m >= 1");
    require(k >= 1, "colored_cascade_decompose requires k >= 1");
    require(r >= k, "colored_cascade_decompose requires r >= k");
    ColoredCascadeRep rep{k, r, {}};
    Count rest = m;
    for (int i = 0; k - i >= 1 && rest > 0; ++i) {
        const int level = k - i;
        const int colors = r - i;
        const auto value = [level, colors](std::int64_t n) { return turan_coefficient(n, level, colors); };
        // C(level, level)_colors = 1 <= rest, so the search starts at n = level.
        const std::int64_t n = detail::largest_at_most(value, rest, level, level);
        rep.terms.push_back({n, level, colors});
        rest -= turan_coefficient(n, level, colors);
    }
    return rep;
}

Count colored_cascade_evaluate(const ColoredCascadeRep& c) {
    require(c.k >= 1 && c.r >= c.k, "colored cascade requires r >= k >= 1");
    require(!c.terms.empty(), "colored cascade has no terms");
    Count total = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const ColoredTerm& t = c.terms[i];
        require(t.level == c.k - static_cast<int>(i), "colored cascade levels must run k, k-1, ...");
        require(t.colors == c.r - static_cast<int>(i), "colored cascade color budgets must run r, r-1, ...");
        require(t.level >= 1, "colored cascade levels must stay positive");
        if (i) {
            const ColoredTerm& prev = c.terms[i - 1];
            require(prev.n - prev.n / prev.colors > t.n, "colored cascade gap condition violated");
        }
        total += turan_coefficient(t.n, t.level, t.colors);
    }
    require(c.terms.back().n >= c.terms.back().level, "last colored cascade constant must be >= its level");
    return total;
}

Count colored_shadow_bound(const Count& m, int k, int p, int r) {
    require(m >= 1, "colored_shadow_bound requires m >= 1");
    require(p >= 1 && p < k, "colored_shadow_bound requires 1 <= p < k");
    require(k <= r, "colored_shadow_bound requires k <= r");
    const ColoredCascadeRep rep = colored_cascade_decompose(m, k, r);
    Count total = 0;
    for (const ColoredTerm& t : rep.terms) {
        const int lower = t.level - (k - p);
        if (lower >= 0) total += turan_coefficient(t.n, lower, t.colors);
    }
    return total;
}

Validation validate_colored_face_vector(const FaceVector& f, int r) {
    require(r >= 1, "validate_colored_face_vector requires r >= 1");
    const std::size_t top = f.size() - 1;  // largest face cardinality
    for (std::size_t k = 2; k <= top && k <= static_cast<std::size_t>(r); ++k) {
        const int level = static_cast<int>(k);
        if (f.faces_on(k - 1) < colored_shadow_bound(f.faces_on(k), level, level - 1, r)) return {false, level};
    }
    if (top > static_cast<std::size_t>(r)) return {false, r + 1};
    return {};
}

}  // namespace kkb
