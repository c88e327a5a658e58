#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kkbounds/count.hpp"

namespace kkb {

enum class SelftestScale { Quick, Full };

struct SelftestHooks {
    /// Turán coefficient under test; swapped out for fault injection.
    std::function<Count(std::int64_t, int, int)> turan;

    SelftestHooks();
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

std::vector<SuiteResult> run_selftest_suites(SelftestScale scale, const SelftestHooks& hooks = {});

/// Prints one line per suite and a summary; returns 0 or 4.
int run_selftest(SelftestScale scale, std::ostream& out, const SelftestHooks& hooks = {});

}  // namespace kkb
