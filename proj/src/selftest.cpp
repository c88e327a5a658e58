#include "kkbounds/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "kkbounds/approx.hpp"
#include "kkbounds/cascade.hpp"
#include "kkbounds/colored.hpp"
#include "kkbounds/combinatorics.hpp"
#include "kkbounds/complex.hpp"

namespace kkb {

SelftestHooks::SelftestHooks() : turan(turan_coefficient) {}

namespace {

constexpr double kSlack = 1e-9;

struct Ranges {
    int turan_n;
    int cascade_m;
    int sharp_m;
    int colored_m;
    int randoms;
};

Ranges ranges_for(SelftestScale scale) {
    if (scale == SelftestScale::Full) return {12, 5000, 500, 2000, 1000};
    return {8, 600, 120, 300, 150};
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.checks;
        if (!ok && result_.failures++ == 0) result_.first_failure = describe();
    }

    template <class Body>
    SuiteResult run(Body&& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            ++result_.failures;
            if (result_.first_failure.empty()) result_.first_failure = std::string("exception: ") + e.what();
        }
        return result_;
    }

private:
    SuiteResult result_;
};

template <class... Args>
std::string str(const Args&... args) {
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

bool at_most(double bound, const Count& actual) { return bound <= to_double(actual) * (1 + kSlack); }
bool at_most(const Count& bound, const Count& actual) { return bound <= actual; }

// Every applicable bound at every (k, p, r) against the complex's true counts.
void check_soundness(Suite& s, const SimplicialComplex& complex, const std::string& label) {
    const FaceVector f = f_vector(complex);
    s.check(validate_face_vector(f).valid, [&] { return label + ": f-vector rejected"; });
    const bool flag = is_flag(complex);
    const int chi = chromatic_number(complex);
    if (chi > 0) s.check(validate_colored_face_vector(f, chi).valid, [&] { return label + ": colored f-vector rejected"; });
    const auto chain = symmetric_chain(f);
    s.check(chain.strictly_decreasing, [&] { return label + ": symmetric chain not decreasing"; });

    const int top = static_cast<int>(f.size()) - 1;
    for (int k = 2; k <= top; ++k) {
        const Count m = f.faces_on(k);
        for (int p = 1; p < k; ++p) {
            const Count actual = f.faces_on(p);
            const auto where = [&](const char* what, int r = 0) {
                return str(label, ": ", what, " exceeds f at k=", k, " p=", p, " r=", r);
            };
            s.check(at_most(shadow_bound(m, k, p), actual), [&] { return where("kk"); });
            s.check(at_most(lovasz_bound(m, k, p), actual), [&] { return where("lovasz"); });
            s.check(at_most(withoutr_bound(m, k, p), actual), [&] { return where("withoutr"); });
            s.check(at_most(noreasy_bound(m, k, p), actual), [&] { return where("noreasy"); });
            for (int r = std::max(k, chi); r <= std::max(k, chi) + 2; ++r) {
                s.check(at_most(colored_shadow_bound(m, k, p, r), actual), [&] { return where("colored kk", r); });
                s.check(at_most(colorapprox_bound(m, k, p, r), actual), [&] { return where("colorapprox", r); });
            }
            const int br = best_r(m, k);
            s.check(at_most(colorapprox_bound(m, k, p, br), actual), [&] { return where("withr", br); });
            if (flag) {
                const int fr = flag_r(m, k);
                s.check(at_most(colorapprox_bound(m, k, p, fr), actual), [&] { return where("flag", fr); });
                const int dim_r = top;
                s.check(at_most(colorapprox_bound(m, k, p, dim_r), actual), [&] { return where("flagdim", dim_r); });
            }
        }
    }
}

std::vector<SuiteResult> suites(SelftestScale scale, const SelftestHooks& hooks) {
    const Ranges range = ranges_for(scale);
    std::vector<SuiteResult> results;

    results.push_back(Suite("turan coefficient = brute-force clique count").run([&](Suite& s) {
        for (int n = 0; n <= range.turan_n; ++n)
            for (int r = 1; r <= std::max(n, 1); ++r)
                for (int k = 0; k <= n; ++k)
                    s.check(hooks.turan(n, k, r) == turan_clique_count_oracle(n, k, r),
                            [&] { return str("C(", n, ",", k, ")_", r, " disagrees with enumeration"); });
    }));

    results.push_back(Suite("turan full level C(pr,k)_r = C(r,k) p^k").run([&](Suite& s) {
        for (int p = 1; p <= 4; ++p)
            for (int r = 1; r <= 6; ++r)
                for (int k = 1; k <= r; ++k) {
                    Count expected = binomial(r, k);
                    for (int i = 0; i < k; ++i) expected *= p;
                    s.check(hooks.turan(std::int64_t{p} * r, k, r) == expected,
                            [&] { return str("C(", p * r, ",", k, ")_", r, " != C(r,k) p^k"); });
                }
    }));

    results.push_back(Suite("real binomial").run([&](Suite& s) {
        for (int k = 1; k <= 12; ++k) {
            double prev = binom_real(k - 1 + 1e-3, k);
            for (int step = 2; step <= 400; ++step) {
                const double x = k - 1 + step * 0.137;
                const double value = binom_real(x, k);
                s.check(value > prev, [&] { return str("binom_real not increasing at x=", x, " k=", k); });
                prev = value;
            }
        }
        for (int n = 1; n <= 60; ++n)
            for (int k = 1; k <= n; ++k) {
                const double exact = to_double(binomial(n, k));
                s.check(std::abs(binom_real(n, k) - exact) <= 1e-12 * exact,
                        [&] { return str("binom_real(", n, ",", k, ") off"); });
                const double lower = std::pow(n - k + 1.0, k) / factorial(k);
                const double upper = std::pow(n - 0.5 * k + 0.5, k) / factorial(k);
                s.check(lower <= exact * (1 + kSlack) && exact <= upper * (1 + kSlack),
                        [&] { return str("sandwich fails at n=", n, " k=", k); });
            }
    }));

    results.push_back(Suite("cascade round trip").run([&](Suite& s) {
        for (int k = 1; k <= 6; ++k)
            for (int m = 1; m <= range.cascade_m; ++m)
                s.check(cascade_evaluate(cascade_decompose(m, k)) == m,
                        [&] { return str("cascade(", m, ",", k, ") does not reproduce m"); });
    }));

    results.push_back(Suite("rev-lex sharpness and shadow monotonicity").run([&](Suite& s) {
        for (int k = 2; k <= 5; ++k)
            for (int m = 1; m <= range.sharp_m; ++m) {
                const FaceVector f = f_vector(revlex_complex(m, k));
                for (int p = 1; p < k; ++p) {
                    s.check(shadow_bound(m, k, p) == f.faces_on(p),
                            [&] { return str("shadow_bound(", m, ",", k, ",", p, ") != rev-lex count"); });
                    s.check(shadow_bound(m + 1, k, p) >= shadow_bound(m, k, p),
                            [&] { return str("shadow_bound not monotone at m=", m); });
                }
            }
        for (int n = 1; n <= 12; ++n)
            for (int k = 2; k <= n; ++k)
                for (int p = 1; p < k; ++p)
                    s.check(shadow_bound(binomial(n, k), k, p) == binomial(n, p),
                            [&] { return str("full level n=", n, " k=", k, " p=", p); });
    }));

    results.push_back(Suite("colored cascade").run([&](Suite& s) {
        for (int r = 1; r <= 5; ++r)
            for (int k = 1; k <= r; ++k)
                for (int m = 1; m <= range.colored_m; ++m)
                    s.check(colored_cascade_evaluate(colored_cascade_decompose(m, k, r)) == m,
                            [&] { return str("colored cascade(", m, ",", k, ",", r, ") does not reproduce m"); });
        for (int n = 1; n <= 12; ++n)
            for (int r = 2; r <= 4; ++r)
                for (int k = 2; k <= std::min(r, n); ++k)
                    for (int p = 1; p < k; ++p)
                        s.check(colored_shadow_bound(hooks.turan(n, k, r), k, p, r) == hooks.turan(n, p, r),
                                [&] { return str("colored full level n=", n, " k=", k, " p=", p, " r=", r); });
        for (int k = 2; k <= 5; ++k)
            for (int r = k; r <= 5; ++r)
                for (int p = 1; p < k; ++p)
                    for (int m = 1; m <= range.sharp_m; ++m)
                        s.check(colored_shadow_bound(m, k, p, r) >= shadow_bound(m, k, p),
                                [&] { return str("colored below uncolored at m=", m, " k=", k, " r=", r); });
    }));

    results.push_back(Suite("turan clique complexes").run([&](Suite& s) {
        for (int n = 1; n <= range.turan_n; ++n)
            for (int r = 1; r <= n; ++r) {
                const SimplicialComplex complex = clique_complex(to_graph(TuranGraph(n, r)));
                const FaceVector f = f_vector(complex);
                s.check(is_r_colorable(complex, r), [&] { return str("T(", n, ",", r, ") not r-colorable"); });
                s.check(validate_colored_face_vector(f, r).valid, [&] { return str("T(", n, ",", r, ") rejected"); });
                for (int k = 2; k <= std::min(r, n); ++k)
                    for (int p = 1; p < k; ++p) {
                        s.check(colored_shadow_bound(f.faces_on(k), k, p, r) <= f.faces_on(p),
                                [&] { return str("colored bound exceeds T(", n, ",", r, ") count"); });
                        s.check(at_most(colorapprox_bound(f.faces_on(k), k, p, r), f.faces_on(p)),
                                [&] { return str("colorapprox exceeds T(", n, ",", r, ") count"); });
                    }
            }
    }));

    results.push_back(Suite("approximate bound ordering").run([&](Suite& s) {
        for (int k = 2; k <= 12; ++k)
            for (int p = 1; p < k; ++p)
                for (double e = 0; e <= 12; e += 0.25) {
                    const Count m(std::floor(std::pow(10.0, e)));
                    const double no = noreasy_bound(m, k, p);
                    const double wo = withoutr_bound(m, k, p);
                    const double lo = lovasz_bound(m, k, p);
                    const Count kk = shadow_bound(m, k, p);
                    s.check(no < wo * (1 + kSlack) && wo < lo * (1 + kSlack) && at_most(lo, kk),
                            [&] { return str("ordering fails at m=", m, " k=", k, " p=", p); });
                }
    }));

    results.push_back(Suite("withr dominates lovasz").run([&](Suite& s) {
        for (int k = 2; k <= 10; ++k)
            for (int r = k; r <= k + 12; ++r) {
                const Count base = binomial(r, k);
                const Count extra = binomial(r - 1, k - 1);
                for (int p = 1; p < k; ++p)
                    for (int step = 0; step <= 8; ++step) {
                        const Count m = base + extra * step / 8;
                        s.check(best_r(m, k) == r, [&] { return str("best_r(", m, ",", k, ") != ", r); });
                        const double withr = colorapprox_bound(m, k, p, r);
                        const double lov = lovasz_bound(m, k, p);
                        s.check(withr >= lov * (1 - kSlack),
                                [&] { return str("withr below lovasz at m=", m, " k=", k, " p=", p); });
                        if (step == 0)
                            s.check(std::abs(withr - lov) <= kSlack * lov,
                                    [&] { return str("withr != lovasz at m=C(", r, ",", k, ")"); });
                    }
            }
        for (int k = 2; k <= 6; ++k)
            for (int m = 1; m <= range.cascade_m; ++m) {
                const std::int64_t lead = cascade_decompose(m, k).leading();
                const int r = best_r(m, k);
                s.check(r == lead || r == lead + 1, [&] { return str("best_r(", m, ",", k, ") not n_k or n_k+1"); });
            }
    }));

    results.push_back(Suite("falling-factorial lemmas").run([&](Suite& s) {
        for (int k = 2; k <= 12; ++k)
            for (int p = 1; p < k; ++p)
                for (int step = 1; step <= 60; ++step) {
                    const long double x = k - 1 + step * 0.31L;
                    const long double c = (k - p) / 2.0L;
                    long double lhs = 0, rhs = 0;
                    for (int i = 0; i < k; ++i) lhs += std::log(x - i);
                    for (int i = 0; i < p; ++i) rhs += std::log(x - c - i);
                    s.check(std::exp(rhs / p) - std::exp(lhs / k) > 0,
                            [&] { return str("narrowing lemma fails at x=", static_cast<double>(x)); });
                }
        for (int p = 2; p <= 10; ++p)
            for (int step = 1; step <= 40; ++step)
                for (double c : {0.05, 0.5, 1.0, 3.5, 10.0}) {
                    const long double x = p - 1 + step * 0.43L;
                    long double shifted = 0, plain = 0;
                    for (int i = 0; i < p; ++i) {
                        shifted += std::log(x + c - i);
                        plain += std::log(x - i);
                    }
                    s.check(std::exp(shifted / p) - std::exp(plain / p) - c > 0,
                            [&] { return str("shift lemma fails at x=", static_cast<double>(x), " c=", c); });
                }
    }));

    results.push_back(Suite("complex constructions").run([&](Suite& s) {
        for (int k = 1; k <= 4; ++k) {
            const auto sets = revlex_ksets(200, k);
            for (std::size_t i = 1; i < sets.size(); ++i)
                s.check(revlex_precedes(sets[i - 1], sets[i]), [&] { return str("rev-lex order broken at ", i); });
        }
        for (int k = 2; k <= 4; ++k)
            for (int r = k; r <= 8; ++r) {
                const Count limit = binomial(r, k) + binomial(r - 1, k - 1);
                const SimplicialComplex complex = revlex_complex(limit, k);
                bool both = false;
                for (const Face& facet : complex.faces_of_size(k))
                    both = both || (std::count(facet.begin(), facet.end(), r) && std::count(facet.begin(), facet.end(), r + 1));
                s.check(!both, [&] { return str("rev-lex complex uses both ", r, " and ", r + 1); });
                s.check(is_r_colorable(complex, r), [&] { return str("rev-lex complex not ", r, "-colorable"); });
            }
        for (int q = 1; q <= 3; ++q) {
            const SimplicialComplex base = revlex_complex(5, 3);
            const FaceVector fb = f_vector(base);
            const FaceVector fq = f_vector(replicate(base, q));
            Count scale = 1;
            for (std::size_t i = 0; i < fb.size(); ++i, scale *= q)
                s.check(fq.faces_on(i) == scale * fb.faces_on(i), [&] { return str("replicate q=", q, " level ", i); });
        }
    }));

    results.push_back(Suite("random complex soundness").run([&](Suite& s) {
        for (int i = 0; i < range.randoms; ++i) {
            const int n = 3 + i % 6;
            const double density = 0.3 + 0.6 * ((i * 37) % 100) / 100.0;
            RandomComplexOptions options;
            options.prune_fraction = (i % 3 == 0) ? 0.4 : 0.0;
            const SimplicialComplex complex = random_complex(n, density, 1000 + i, options);
            if (options.prune_fraction == 0.0)
                s.check(is_flag(complex), [&] { return str("unpruned random complex ", i, " not flag"); });
            check_soundness(s, complex, str("random complex ", i));
        }
    }));

    return results;
}

}  // namespace

std::vector<SuiteResult> run_selftest_suites(SelftestScale scale, const SelftestHooks& hooks) {
    return suites(scale, hooks);
}

int run_selftest(SelftestScale scale, std::ostream& out, const SelftestHooks& hooks) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_selftest_suites(scale, hooks);
    std::size_t checks = 0;
    std::size_t failed_suites = 0;
    for (const SuiteResult& r : results) {
        checks += r.checks;
        out << (r.failures ? "FAIL " : "ok   ") << r.name << " (" << r.checks << " checks";
        if (r.failures) out << ", " << r.failures << " failed; first: " << r.first_failure;
        out << ")\n";
        if (r.failures) ++failed_suites;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1f s", seconds);
    out << results.size() - failed_suites << "/" << results.size() << " suites passed, " << checks << " checks, "
        << elapsed << "\n";
    return failed_suites ? 4 : 0;
}

}  // namespace kkb
