#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kkbounds/count.hpp"

namespace kkb {

enum class RMode {
    Auto,   // withr at best_r, flag at flag_r
    Best,   // withr columns only
    Flag,   // flag columns only
    Fixed,  // both columns at the given r, where its precondition holds
    Off,
};

enum class OutputFormat { Csv, Json };

struct SweepSpec {
    int k = 10;
    int p = 7;
    Count m_start = 1;
    Count m_end = 1;
    /// Number of sampled m values; nullopt means every m in range.
    std::optional<std::size_t> samples = 200;
    bool linear = false;
    RMode r_mode = RMode::Auto;
    int fixed_r = 0;
    OutputFormat format = OutputFormat::Csv;

    /// Throws PreconditionError naming the first violated invariant.
    void check() const;
};

struct SweepRow {
    Count m;
    Count kk_exact;
    double lovasz = 0;
    double withoutr = 0;
    double noreasy = 0;
    std::optional<int> withr_r;
    std::optional<double> withr;
    std::optional<int> flag_r;
    std::optional<double> flag;
};

inline constexpr const char* kSweepHeader = "m,kk_exact,lovasz,withoutr,noreasy,withr_r,withr,flag_r,flag";

/// Strictly increasing m values in [m_start, m_end], endpoints included.
std::vector<Count> sample_points(const SweepSpec& spec);

SweepRow sweep_row(const Count& m, const SweepSpec& spec);
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// 12 significant digits, locale-independent.
std::string format_real(double value);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace kkb
