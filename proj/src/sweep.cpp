#include "kkbounds/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "json.hpp"

#include "kkbounds/approx.hpp"
#include "kkbounds/cascade.hpp"
#include "kkbounds/combinatorics.hpp"

namespace kkb {

namespace {

constexpr std::size_t kMaxExhaustiveRows = 10'000'000;

}  // namespace

void SweepSpec::check() const {
    require(p >= 1, "sweep requires p >= 1");
    require(p < k, "sweep requires p < k");
    require(m_start >= 1, "sweep requires m_start >= 1");
    require(m_end >= m_start, "sweep requires m_end >= m_start");
    require(!samples || *samples >= 2, "sweep requires samples >= 2");
    if (r_mode == RMode::Fixed) require(fixed_r >= k, "sweep requires k <= r");
}

std::vector<Count> sample_points(const SweepSpec& spec) {
    spec.check();
    const Count available = spec.m_end - spec.m_start + 1;
    std::vector<Count> points;
    if (!spec.samples || available <= *spec.samples) {
        if (available > kMaxExhaustiveRows)
            throw PreconditionError("sweep over every m would emit more than 10^7 rows; pass --samples");
        const auto n = available.convert_to<std::size_t>();
        points.reserve(n);
        for (std::size_t i = 0; i < n; ++i) points.push_back(spec.m_start + i);
        return points;
    }

    const std::size_t n = *spec.samples;
    const Count span = spec.m_end - spec.m_start;
    points.reserve(n);
    const long double log_lo = log_count(spec.m_start);
    const long double log_hi = log_count(spec.m_end);
    for (std::size_t i = 0; i < n; ++i) {
        Count value;
        if (i == 0) {
            value = spec.m_start;
        } else if (i + 1 == n) {
            value = spec.m_end;
        } else if (spec.linear) {
            value = spec.m_start + span * i / (n - 1);
        } else {
            const long double t = static_cast<long double>(i) / static_cast<long double>(n - 1);
            const long double x = std::exp(log_lo + t * (log_hi - log_lo));
            value = Count(std::floor(static_cast<double>(x) + 0.5));
        }
        // Keep strictly increasing while leaving room for the remaining points.
        if (!points.empty() && value <= points.back()) value = points.back() + 1;
        const Count room = spec.m_end - (n - 1 - i);
        if (value > room) value = room;
        points.push_back(value);
    }
    return points;
}

SweepRow sweep_row(const Count& m, const SweepSpec& spec) {
    const int k = spec.k;
    const int p = spec.p;
    SweepRow row;
    row.m = m;
    row.kk_exact = shadow_bound(m, k, p);
    row.lovasz = lovasz_bound(m, k, p);
    row.withoutr = withoutr_bound(m, k, p);
    row.noreasy = noreasy_bound(m, k, p);
    switch (spec.r_mode) {
        case RMode::Auto:
        case RMode::Best:
        case RMode::Flag:
            if (spec.r_mode != RMode::Flag) {
                row.withr_r = best_r(m, k);
                row.withr = colorapprox_bound(m, k, p, *row.withr_r);
            }
            if (spec.r_mode != RMode::Best) {
                row.flag_r = flag_r(m, k);
                row.flag = colorapprox_bound(m, k, p, *row.flag_r);
            }
            break;
        case RMode::Fixed: {
            const int r = spec.fixed_r;
            if (m <= binomial(r, k) + binomial(r - 1, k - 1)) {
                row.withr_r = r;
                row.withr = colorapprox_bound(m, k, p, r);
            }
            if (m < binomial(r + 1, k)) {
                row.flag_r = r;
                row.flag = colorapprox_bound(m, k, p, r);
            }
            break;
        }
        case RMode::Off:
            break;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    for (const Count& m : sample_points(spec)) rows.push_back(sweep_row(m, spec));
    return rows;
}

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow& row : rows) {
        out << row.m << ',' << row.kk_exact << ',' << format_real(row.lovasz) << ',' << format_real(row.withoutr)
            << ',' << format_real(row.noreasy) << ',';
        if (row.withr_r) out << *row.withr_r;
        out << ',';
        if (row.withr) out << format_real(*row.withr);
        out << ',';
        if (row.flag_r) out << *row.flag_r;
        out << ',';
        if (row.flag) out << format_real(*row.flag);
        out << '\n';
    }
}

namespace {

nlohmann::ordered_json exact(const Count& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

// Round-trips through the CSV rendering so both formats carry the same digits.
nlohmann::ordered_json real(const std::optional<double>& value) {
    if (!value) return nullptr;
    return std::strtod(format_real(*value).c_str(), nullptr);
}

template <class T>
nlohmann::ordered_json maybe(const std::optional<T>& value) {
    if (!value) return nullptr;
    return *value;
}

}  // namespace

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    auto array = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["m"] = exact(row.m);
        obj["kk_exact"] = exact(row.kk_exact);
        obj["lovasz"] = real(row.lovasz);
        obj["withoutr"] = real(row.withoutr);
        obj["noreasy"] = real(row.noreasy);
        obj["withr_r"] = maybe(row.withr_r);
        obj["withr"] = real(row.withr);
        obj["flag_r"] = maybe(row.flag_r);
        obj["flag"] = real(row.flag);
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

}  // namespace kkb
