#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include "kkbounds/approx.hpp"
#include "kkbounds/cascade.hpp"
#include "kkbounds/combinatorics.hpp"
#include "kkbounds/sweep.hpp"

using namespace kkb;

namespace {

SweepSpec spec_for(int k, int p, Count lo, Count hi, std::optional<std::size_t> samples = 200) {
    SweepSpec spec;
    spec.k = k;
    spec.p = p;
    spec.m_start = lo;
    spec.m_end = hi;
    spec.samples = samples;
    return spec;
}

std::string csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

}  // namespace

TEST_CASE("sample points") {
    const auto geo = sample_points(spec_for(10, 7, 1, binomial(50, 10)));
    REQUIRE(geo.size() == 200);
    CHECK(geo.front() == 1);
    CHECK(geo.back() == binomial(50, 10));
    for (std::size_t i = 1; i < geo.size(); ++i) CHECK(geo[i] > geo[i - 1]);
    // Equal ratios: the midpoint sits near the geometric mean.
    CHECK(geo[100].convert_to<double>() < 2e5);

    SweepSpec linear = spec_for(3, 2, 1, 1000, 11);
    linear.linear = true;
    const auto lin = sample_points(linear);
    REQUIRE(lin.size() == 11);
    CHECK(lin[1] == 100);
    CHECK(lin[5] == 500);

    const auto all = sample_points(spec_for(2, 1, 1, 10, std::nullopt));
    CHECK(all.size() == 10);
    CHECK(sample_points(spec_for(2, 1, 5, 9, 200)).size() == 5);
    CHECK(sample_points(spec_for(2, 1, 1, 3, 3)) == std::vector<Count>{1, 2, 3});
}

TEST_CASE("sweep preconditions") {
    CHECK_THROWS_AS(sample_points(spec_for(3, 3, 1, 10)), PreconditionError);
    CHECK_THROWS_AS(sample_points(spec_for(3, 0, 1, 10)), PreconditionError);
    CHECK_THROWS_AS(sample_points(spec_for(3, 2, 0, 10)), PreconditionError);
    CHECK_THROWS_AS(sample_points(spec_for(3, 2, 10, 9)), PreconditionError);
    CHECK_THROWS_AS(sample_points(spec_for(3, 2, 1, 10, 1)), PreconditionError);
    CHECK_THROWS_AS(sample_points(spec_for(3, 2, 1, 100'000'000, std::nullopt)), PreconditionError);
    SweepSpec fixed = spec_for(3, 2, 1, 10);
    fixed.r_mode = RMode::Fixed;
    fixed.fixed_r = 2;
    CHECK_THROWS_AS(fixed.check(), PreconditionError);
}

TEST_CASE("rows carry every bound") {
    const auto rows = run_sweep(spec_for(2, 1, 1, 10, std::nullopt));
    REQUIRE(rows.size() == 10);
    for (const SweepRow& row : rows) {
        CHECK(row.kk_exact == shadow_bound(row.m, 2, 1));
        CHECK(row.lovasz == lovasz_bound(row.m, 2, 1));
        REQUIRE(row.withr_r);
        CHECK(*row.withr_r == best_r(row.m, 2));
        REQUIRE(row.flag_r);
        CHECK(*row.flag_r == flag_r(row.m, 2));
    }
}

TEST_CASE("row ordering across the first range") {
    for (const SweepRow& row : run_sweep(spec_for(10, 7, 1, binomial(51, 10)))) {
        CHECK(row.noreasy < row.withoutr);
        CHECK(row.withoutr < row.lovasz);
        CHECK(row.lovasz <= row.kk_exact.convert_to<double>() * (1 + 1e-9));
        if (*row.withr_r == cascade_decompose(row.m, 10).leading()) CHECK(*row.withr >= row.lovasz * (1 - 1e-9));
    }
}

TEST_CASE("zoomed range") {
    const Count lo = binomial(50, 10) + 1;
    const Count hi = binomial(51, 10) - 1;
    const Count jump = binomial(50, 10) + binomial(49, 9);
    SweepSpec spec = spec_for(10, 7, lo, hi, 400);
    spec.linear = true;
    const auto rows = run_sweep(spec);
    bool exceeds = false;
    for (const SweepRow& row : rows) {
        CHECK(*row.withr_r == (row.m <= jump ? 50 : 51));
        exceeds = exceeds || *row.flag > row.kk_exact.convert_to<double>();
    }
    CHECK(exceeds);
    CHECK(sweep_row(jump, spec).withr_r == 50);
    CHECK(sweep_row(jump + 1, spec).withr_r == 51);
}

TEST_CASE("r modes") {
    SweepSpec spec = spec_for(3, 2, 1, 60, std::nullopt);
    spec.r_mode = RMode::Off;
    SweepRow row = sweep_row(20, spec);
    CHECK_FALSE(row.withr_r);
    CHECK_FALSE(row.flag);
    spec.r_mode = RMode::Best;
    row = sweep_row(20, spec);
    CHECK(row.withr_r);
    CHECK_FALSE(row.flag_r);
    spec.r_mode = RMode::Flag;
    row = sweep_row(20, spec);
    CHECK_FALSE(row.withr_r);
    CHECK(row.flag_r);
    spec.r_mode = RMode::Fixed;
    spec.fixed_r = 6;
    row = sweep_row(20, spec);
    CHECK(*row.withr_r == 6);
    CHECK(*row.flag_r == 6);
    row = sweep_row(31, spec);  // past C(6,3)+C(5,2) = 30, still below C(7,3)
    CHECK_FALSE(row.withr_r);
    CHECK(*row.flag_r == 6);
    row = sweep_row(35, spec);
    CHECK_FALSE(row.flag_r);
}

TEST_CASE("csv layout") {
    const std::string text = csv(run_sweep(spec_for(3, 2, 11, 11, std::nullopt)));
    std::istringstream lines(text);
    std::string header, line;
    std::getline(lines, header);
    CHECK(header == "m,kk_exact,lovasz,withoutr,noreasy,withr_r,withr,flag_r,flag");
    std::getline(lines, line);
    CHECK(line.rfind("11,12,10.564355102,10.3114304625,8.16581045214,5,", 0) == 0);
    CHECK(format_real(1.0 / 3) == "0.333333333333");
    CHECK(format_real(99884400.0) == "99884400");

    SweepSpec off = spec_for(3, 2, 11, 11, std::nullopt);
    off.r_mode = RMode::Off;
    const std::string bare = csv(run_sweep(off));
    CHECK(bare.substr(bare.size() - 5) == ",,,,\n");
}

TEST_CASE("json mirrors csv") {
    const auto spec = spec_for(10, 7, 1, binomial(51, 10), 25);
    const auto rows = run_sweep(spec);
    std::ostringstream out;
    write_json(out, rows);
    const auto doc = nlohmann::ordered_json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == rows.size());
    std::istringstream table(csv(rows));
    std::string line;
    std::getline(table, line);
    for (const auto& obj : doc) {
        std::getline(table, line);
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
        const char* names[] = {"m", "kk_exact", "lovasz", "withoutr", "noreasy", "withr_r", "withr", "flag_r", "flag"};
        std::size_t i = 0;
        for (auto it = obj.begin(); it != obj.end(); ++it, ++i) {
            CHECK(it.key() == names[i]);
            if (i >= 2) CHECK(it.value().get<double>() == std::strtod(cells[i].c_str(), nullptr));
            else CHECK(Count(it.value().get<std::uint64_t>()) == Count(cells[i]));
        }
        CHECK(i == 9);
    }
}

TEST_CASE("sweeps are deterministic") {
    const auto spec = spec_for(10, 7, 1, binomial(51, 10));
    CHECK(csv(run_sweep(spec)) == csv(run_sweep(spec)));
}
