#include "kkbounds/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kkbounds/approx.hpp"
#include "kkbounds/cascade.hpp"
#include "kkbounds/colored.hpp"
#include "kkbounds/combinatorics.hpp"
#include "kkbounds/complex.hpp"
#include "kkbounds/selftest.hpp"
#include "kkbounds/sweep.hpp"

namespace kkb::cli {

namespace {

struct BoundArgs {
    std::string m;
    int k = 0;
    int p = 0;
    std::optional<int> r;
    std::string format = "table";
};

struct CascadeArgs {
    std::string m;
    int k = 0;
    std::optional<int> r;
};

struct ValidateArgs {
    std::string vector;
    std::optional<int> r;
    bool realize = false;
};

struct SweepArgs {
    int k = 0;
    int p = 0;
    std::string m_start = "1";
    std::string m_end;
    std::string samples = "200";
    bool linear = false;
    std::optional<int> r;
    std::string r_mode = "auto";
    std::string format = "csv";
};

int cmd_bound(const BoundArgs& args, std::ostream& out) {
    const Count m = parse_count(args.m);
    const BoundReport report = make_bound_report(m, args.k, args.p, args.r);
    const char* colored_name = args.r ? "colored" : "withr";
    if (args.format == "json") {
        nlohmann::ordered_json obj;
        obj["m"] = report.m.str();
        obj["k"] = report.k;
        obj["p"] = report.p;
        obj["kk_exact"] = report.kk_exact.str();
        obj["lovasz"] = report.lovasz;
        obj["lovasz_x"] = report.lovasz_x;
        obj["withoutr"] = report.withoutr;
        obj["noreasy"] = report.noreasy;
        obj[std::string(colored_name) + "_r"] = report.colored->r;
        obj[colored_name] = report.colored->value;
        obj["flag_r"] = report.flag->r;
        obj["flag"] = report.flag->value;
        out << obj.dump(2) << '\n';
    } else if (args.format == "csv") {
        SweepRow row;
        row.m = report.m;
        row.kk_exact = report.kk_exact;
        row.lovasz = report.lovasz;
        row.withoutr = report.withoutr;
        row.noreasy = report.noreasy;
        row.withr_r = report.colored->r;
        row.withr = report.colored->value;
        row.flag_r = report.flag->r;
        row.flag = report.flag->value;
        write_csv(out, {row});
    } else {
        const auto line = [&out](const std::string& name, const std::string& value) {
            out << std::left << std::setw(10) << name << value << '\n';
        };
        line("m", report.m.str());
        line("k", std::to_string(report.k));
        line("p", std::to_string(report.p));
        line("kk_exact", report.kk_exact.str());
        line("lovasz", format_real(report.lovasz) + " (x = " + format_real(report.lovasz_x) + ")");
        line("withoutr", format_real(report.withoutr));
        line("noreasy", format_real(report.noreasy));
        line(colored_name, format_real(report.colored->value) + " (r = " + std::to_string(report.colored->r) + ")");
        line("flag", format_real(report.flag->value) + " (r = " + std::to_string(report.flag->r) + ")");
    }
    return kExitOk;
}

int cmd_cascade(const CascadeArgs& args, std::ostream& out) {
    const Count m = parse_count(args.m);
    std::vector<Count> values;
    std::string terms;
    if (args.r) {
        const ColoredCascadeRep rep = colored_cascade_decompose(m, args.k, *args.r);
        terms = rep.to_string();
        for (const ColoredTerm& t : rep.terms) values.push_back(turan_coefficient(t.n, t.level, t.colors));
    } else {
        const CascadeRep rep = cascade_decompose(m, args.k);
        terms = rep.to_string();
        for (const CascadeTerm& t : rep.terms) values.push_back(binomial(t.n, t.level));
    }
    Count total = 0;
    out << terms << " = ";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "+" : "") << values[i];
        total += values[i];
    }
    out << " = " << total << '\n';
    return kExitOk;
}

FaceVector parse_vector(const std::string& text) {
    std::vector<Count> entries;
    std::istringstream fields(text);
    std::string field;
    while (std::getline(fields, field, ',')) {
        field.erase(0, field.find_first_not_of(" \t"));
        field.erase(field.find_last_not_of(" \t") + 1);
        if (field.empty() || !std::all_of(field.begin(), field.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw PreconditionError("face vector entries must be nonnegative integers, got '" + field + "'");
        entries.emplace_back(field);
    }
    return FaceVector(std::move(entries));
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
    if (args.realize && args.r) throw PreconditionError("--realize builds uncolored complexes; drop --r");
    const FaceVector f = parse_vector(args.vector);
    const Validation verdict = args.r ? validate_colored_face_vector(f, *args.r) : validate_face_vector(f);
    if (!verdict) {
        out << "invalid at k=" << *verdict.failing_k << '\n';
        return kExitInvalid;
    }
    out << "valid\n";
    if (args.realize) write_complex(out, realize_face_vector(f));
    return kExitOk;
}

RMode parse_r_mode(const std::string& name) {
    if (name == "auto") return RMode::Auto;
    if (name == "best") return RMode::Best;
    if (name == "flag") return RMode::Flag;
    if (name == "off") return RMode::Off;
    throw PreconditionError("unknown --r-mode '" + name + "'");
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
    SweepSpec spec;
    spec.k = args.k;
    spec.p = args.p;
    spec.m_start = parse_count(args.m_start);
    spec.m_end = parse_count(args.m_end);
    if (args.samples == "all") {
        spec.samples.reset();
    } else {
        const Count samples = parse_count(args.samples);
        require(samples <= 100'000'000, "--samples is too large");
        spec.samples = samples.convert_to<std::size_t>();
    }
    spec.linear = args.linear;
    spec.r_mode = parse_r_mode(args.r_mode);
    if (args.r) {
        require(args.r_mode == "auto", "--r fixes r; it cannot be combined with --r-mode");
        spec.r_mode = RMode::Fixed;
        spec.fixed_r = *args.r;
    }
    spec.format = args.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    spec.check();
    const auto rows = run_sweep(spec);
    if (spec.format == OutputFormat::Json)
        write_json(out, rows);
    else
        write_csv(out, rows);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kruskal-Katona and Frankl-Furedi-Kalai face-vector bounds", "kkbounds"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Every lower bound on f_{p-1} given f_{k-1} = m");
    bound_cmd->add_option("--m", bound.m, "f_{k-1}; integer or sum of C(n,k) terms")->required();
    bound_cmd->add_option("--k", bound.k, "level of the known face count")->required();
    bound_cmd->add_option("--p", bound.p, "level being bounded, 0 < p < k")->required();
    bound_cmd->add_option("--r", bound.r, "color count for the colored bound (default: best r)");
    bound_cmd->add_option("--format", bound.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CascadeArgs cascade;
    auto* cascade_cmd = app.add_subcommand("cascade", "Cascade (or colored cascade with --r) of m at level k");
    cascade_cmd->add_option("--m", cascade.m, "value to decompose")->required();
    cascade_cmd->add_option("--k", cascade.k, "level")->required();
    cascade_cmd->add_option("--r", cascade.r, "color budget for the colored cascade");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "Check a face vector such as 1,4,6,4,1");
    validate_cmd->add_option("vector", validate.vector, "comma-separated face numbers, starting with 1")->required();
    validate_cmd->add_option("--r", validate.r, "check as an r-colorable face vector");
    validate_cmd->add_flag("--realize", validate.realize, "print a complex with this face vector");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV/JSON table of every bound over a range of m");
    sweep_cmd->add_option("--k", sweep.k, "level of the known face count")->required();
    sweep_cmd->add_option("--p", sweep.p, "level being bounded")->required();
    sweep_cmd->add_option("--m-start", sweep.m_start, "first m (default 1)");
    sweep_cmd->add_option("--m-end", sweep.m_end, "last m")->required();
    sweep_cmd->add_option("--samples", sweep.samples, "number of sampled m values, or 'all' (default 200)");
    sweep_cmd->add_flag("--linear", sweep.linear, "equal spacing instead of equal ratios");
    sweep_cmd->add_option("--r", sweep.r, "fixed r for the withr and flag columns");
    sweep_cmd->add_option("--r-mode", sweep.r_mode, "auto, best, flag or off")
        ->check(CLI::IsMember({"auto", "best", "flag", "off"}));
    sweep_cmd->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string scale = "quick";
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the oracle invariant suites");
    selftest_cmd->add_option("--scale,scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bound_cmd) return cmd_bound(bound, out);
        if (*cascade_cmd) return cmd_cascade(cascade, out);
        if (*validate_cmd) return cmd_validate(validate, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out);
        if (*selftest_cmd)
            return run_selftest(scale == "full" ? SelftestScale::Full : SelftestScale::Quick, out) ? kExitSelftest
                                                                                                  : kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace kkb::cli
