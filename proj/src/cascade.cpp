#include "kkbounds/cascade.hpp"

#include <cmath>
#include <sstream>

#include "kkbounds/combinatorics.hpp"

namespace kkb {

namespace {

// Solves (n - k/2 + 1/2)^k / k! = m for n.
std::int64_t leading_guess(const Count& m, int k) {
    const double root = std::exp((std::lgamma(k + 1.0) + log_count(m)) / k);
    const double guess = root + 0.5 * k - 0.5;
    if (!(guess < 4e18)) return std::int64_t{1} << 62;
    return static_cast<std::int64_t>(std::floor(guess));
}

}  // namespace

std::string CascadeRep::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << '+';
        out << "C(" << terms[i].n << ',' << terms[i].level << ')';
    }
    return out.str();
}

FaceVector::FaceVector(std::vector<Count> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    require(!entries_.empty() && entries_.front() == 1, "face vector must start with 1 (the empty face)");
    for (const Count& e : entries_) require(e > 0, "face vector entries must be positive");
}

FaceVector::FaceVector(std::initializer_list<long long> entries)
    : FaceVector([&] {
          std::vector<Count> v;
          for (long long e : entries) v.emplace_back(e);
          return v;
      }()) {}

Count FaceVector::faces_on(std::size_t i) const { return i < entries_.size() ? entries_[i] : Count(0); }

std::string FaceVector::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    return out.str();
}

CascadeRep cascade_decompose(const Count& m, int k) {
    require(m >= 1, "cascade_decompose requires m >= 1");
    require(k >= 1, "cascade_decompose requires k >= 1");
    CascadeRep rep{k, {}};
    Count rest = m;
    for (int level = k; level >= 1 && rest > 0; --level) {
        const auto value = [level](std::int64_t n) { return binomial(n, level); };
        const std::int64_t n = detail::largest_at_most(value, rest, level, leading_guess(rest, level));
        rep.terms.push_back({n, level});
        rest -= binomial(n, level);
    }
    return rep;
}

Count cascade_evaluate(const CascadeRep& c) {
    require(c.k >= 1, "cascade requires k >= 1");
    require(!c.terms.empty(), "cascade has no terms");
    Count total = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const CascadeTerm& t = c.terms[i];
        require(t.level == c.k - static_cast<int>(i), "cascade levels must run k, k-1, ...");
        require(t.level >= 1, "cascade levels must stay positive");
        if (i) require(c.terms[i - 1].n > t.n, "cascade constants must strictly decrease");
        total += binomial(t.n, t.level);
    }
    require(c.terms.back().n >= c.terms.back().level, "last cascade constant must be >= its level");
    return total;
}

Count shadow_bound(const Count& m, int k, int p) {
    require(m >= 1, "shadow_bound requires m >= 1");
    require(p >= 1 && p < k, "shadow_bound requires 1 <= p < k");
    const CascadeRep rep = cascade_decompose(m, k);
    Count total = 0;
    for (const CascadeTerm& t : rep.terms) total += binomial(t.n, t.level - (k - p));
    return total;
}

Validation validate_face_vector(const FaceVector& f) {
    for (std::size_t k = 1; k < f.size(); ++k) {
        const Count bound = k == 1 ? Count(1) : shadow_bound(f.faces_on(k), static_cast<int>(k), static_cast<int>(k) - 1);
        if (f.faces_on(k - 1) < bound) return {false, static_cast<int>(k)};
    }
    return {};
}

}  // namespace kkb
