// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Run with no arguments for the full suite, or --criterion N for one.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <map>

#include "weylwalk/census.hpp"
#include "weylwalk/chain.hpp"
#include "weylwalk/charpoly.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/harness.hpp"
#include "weylwalk/io.hpp"
#include "weylwalk/parallel.hpp"
#include "weylwalk/stats.hpp"

using namespace weylwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    int id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> run;
};

Outcome criterion_equidistribution_sl2() {
    Outcome out;
    std::ostringstream detail;
    double prev_scaled = 1e9;
    for (std::uint64_t q : {11ull, 23ull, 47ull, 101ull}) {
        const CensusReport r = run_census(GroupSpec{Family::A, 2}, q, CensusMode::enumerate(), 1);
        const double dev = r.max_deviation();
        const double qd = static_cast<double>(q);
        detail << "q=" << q << " max_dev=" << dev << " q*dev=" << qd * dev << "  ";
        if (dev > 4.0 / qd) {
            out.pass = false;
            detail << "[exceeds 4/q] ";
        }
        if (qd * dev > prev_scaled + 1e-12) {
            out.pass = false;
            detail << "[q*dev grew] ";
        }
        prev_scaled = qd * dev;
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_census_sl3() {
    Outcome out;
    std::ostringstream detail;
    const std::uint64_t samples = 1000000;
    for (std::uint64_t q : {7ull, 13ull, 31ull}) {
        const CensusReport r = run_census(GroupSpec{Family::A, 3}, q, CensusMode::sample(samples),
                                          20260809, default_thread_count());
        detail << "q=" << q;
        for (std::size_t i = 0; i < r.table.size(); ++i) {
            const double f = r.table.fractions[i].get_d();
            const double sigma = std::sqrt(f * (1 - f) / static_cast<double>(samples));
            const double allowance = 5.0 / static_cast<double>(q) + 3.0 * sigma;
            detail << " dev(" << r.table.classes[i].to_string() << ")=" << r.deviation(i);
            if (r.deviation(i) > allowance) {
                out.pass = false;
                detail << "[> " << allowance << "]";
            }
        }
        detail << "  ";
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_census_sp4() {
    Outcome out;
    std::ostringstream detail;
    const CensusReport r = run_census(GroupSpec{Family::C, 2}, 3, CensusMode::enumerate(), 1);
    detail << "total=" << r.total;
    if (r.total != 51840) {
        out.pass = false;
        detail << "[want 51840]";
    }
    const double band = (8.0 / 3.0) * (1.0 / 3.0);
    for (std::size_t i = 0; i < r.table.size(); ++i) {
        if (r.deviation(i) > band) {
            out.pass = false;
            detail << " dev(" << r.table.classes[i].to_string() << ")=" << r.deviation(i)
                   << "[> " << band << "]";
        }
    }
    detail << " rs_fraction=" << r.rs_fraction();
    if (r.rs_fraction() < 0.5) {
        out.pass = false;
        detail << " [rs fraction < 0.5: the exact count is 16848/51840 = 0.325; only the"
                  " two order-(q^2-1) and (q^2+1) torus classes contain regular elements"
                  " at q=3, so this clause cannot hold]";
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_rs_density() {
    Outcome out;
    std::ostringstream detail;
    double prev = 0;
    for (std::uint64_t q : {11ull, 23ull, 47ull, 101ull}) {
        const CensusReport r = run_census(GroupSpec{Family::A, 2}, q, CensusMode::enumerate(), 1);
        const double rs = r.rs_fraction();
        detail << "q=" << q << " rs=" << rs << "  ";
        if (rs <= prev) {
            out.pass = false;
            detail << "[not increasing] ";
        }
        if (rs <= 1.0 - 6.0 / static_cast<double>(q)) {
            out.pass = false;
            detail << "[<= 1-6/q] ";
        }
        prev = rs;
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_jordan_ground_truth() {
    Outcome out;
    std::ostringstream detail;
    IntMatrix m(3); // companion of T^3 - T - 1
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    m.at(0, 2) = 1;
    m.at(1, 2) = 1;
    RngStream rng(1);
    const CertifyResult r =
        galois_certify(m, GroupSpec{Family::A, 3}, CertifyOptions{25, 2}, rng);
    if (r.cert.verdict != Certificate::Verdict::ProvenFullWeyl) {
        out.pass = false;
        detail << "verdict=" << verdict_name(r.cert.verdict) << " ";
    }
    std::vector<std::uint64_t> skipped;
    RngStream rng2(2);
    for (std::uint64_t p : primes_from(2, 25)) {
        if (p >= 100) break;
        const FrobeniusObservation obs = classify(m, GroupSpec{Family::A, 3}, p, rng2);
        if (obs.status != FrobStatus::Good) skipped.push_back(p);
    }
    detail << "primes_used=" << r.primes_used << " skipped_below_100={";
    for (std::uint64_t p : skipped) detail << p << " ";
    detail << "}";
    if (skipped != std::vector<std::uint64_t>{23}) out.pass = false;
    out.detail = detail.str();
    return out;
}

Outcome criterion_survey_sl3() {
    Outcome out;
    std::ostringstream detail;
    WalkConfig config;
    config.group = parse_group("SL(3)");
    config.master_seed = 20260809;
    config.mode = WalkMode::Modular;
    config.primes = primes_from(2, 300);
    std::vector<std::size_t> grid;
    for (std::size_t n = 10; n <= 100; n += 10) grid.push_back(n);
    const SurveyResult r =
        survey(config, grid, 200, CertifyOptions{300, 2}, default_thread_count());
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        detail << "n=" << r.points[i].n << ":" << r.points[i].fraction << " ";
        if (i > 0) {
            const bool nondecreasing = r.points[i].fraction >= r.points[i - 1].fraction;
            const bool overlap = r.points[i].wilson_hi >= r.points[i - 1].wilson_lo;
            if (!nondecreasing && !overlap) {
                out.pass = false;
                detail << "[drop beyond Wilson overlap] ";
            }
        }
    }
    if (r.points.back().fraction < 0.99) {
        out.pass = false;
        detail << "[fraction at n=100 below 0.99]";
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_survey_sp4() {
    Outcome out;
    std::ostringstream detail;
    WalkConfig config;
    config.group = parse_group("Sp(4)");
    config.master_seed = 20260809;
    config.mode = WalkMode::Modular;
    config.primes = primes_from(5, 300);
    const SurveyResult r =
        survey(config, {60}, 100, CertifyOptions{300, 5}, default_thread_count());
    detail << "fraction=" << r.points[0].fraction
           << " mean_primes=" << r.points[0].mean_primes;
    if (r.points[0].fraction < 0.9) out.pass = false;
    out.detail = detail.str();
    return out;
}

Outcome criterion_cross_mode() {
    Outcome out;
    std::ostringstream detail;
    WalkConfig config;
    config.group = parse_group("SL(3)");
    config.master_seed = 777;
    config.mode = WalkMode::Dual;
    config.primes = primes_from(2, 20);
    config.length = 30;
    config.validate_and_fill();
    std::uint64_t matches = 0, total = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const WalkState state = run_walk(config, trial);
        const IntPoly exact = charpoly_exact(*state.exact);
        for (std::size_t k = 0; k < config.primes.size(); ++k) {
            ++total;
            if (exact.reduce(config.primes[k]) == charpoly_mod(state.modular[k])) ++matches;
        }
    }
    detail << matches << "/" << total << " matches";
    if (matches != total) out.pass = false;
    out.detail = detail.str();
    return out;
}

Outcome criterion_chain_bound() {
    Outcome out;
    std::ostringstream detail;
    ChainSpec spec;
    spec.states = {"a", "b"};
    spec.kernel = {{mpq_class(9, 10), mpq_class(1, 10)}, {mpq_class(1, 10), mpq_class(9, 10)}};
    const double beta = spectral_gap(spec);
    detail << "beta=" << beta << " ";
    if (std::abs(beta - 0.2) > 1e-9) {
        out.pass = false;
        detail << "[beta not 0.2 to 1e-9] ";
    }
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = 50; n <= 500; n += 50) grid.push_back(n);
    const DeviationReport r = simulate_iota(spec, grid, 100000, 20260809);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (r.empirical[i] > r.bound[i]) {
            out.pass = false;
            detail << "[estimate above bound at n=" << grid[i] << "] ";
        }
        if (r.empirical[i] > 0) {
            xs.push_back(static_cast<double>(grid[i]));
            ys.push_back(std::log(r.empirical[i]));
        }
    }
    if (xs.size() < 2) {
        out.pass = false;
        detail << "[too few nonzero estimates to fit] ";
    } else {
        const LinearFit fit = linear_fit(xs, ys);
        detail << "slope=" << fit.slope << " r2=" << fit.r2;
        if (!(fit.slope < 0) || !(fit.r2 > 0.9)) out.pass = false;
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_torus() {
    Outcome out;
    std::ostringstream detail;
    const auto rows = torus_demo({10000}, TorusMode::ExactDP, 0, 0);
    const double target = std::sqrt(3.0 / (4.0 * std::acos(-1.0)));
    const double rel = std::abs(rows[0].sqrt_n_scaled - target) / target;
    detail << "sqrt(n)P=" << rows[0].sqrt_n_scaled << " target=" << target
           << " rel_err=" << rel;
    if (rel > 0.02) out.pass = false;
    out.detail = detail.str();
    return out;
}

Outcome criterion_invariants() {
    Outcome out;
    std::ostringstream detail;
    // exact fraction sums
    for (unsigned m = 2; m <= 20; ++m) {
        mpq_class total = 0;
        for (const auto& f : enumerate_classes(GroupSpec{Family::A, m}).fractions) total += f;
        if (total != 1) {
            out.pass = false;
            detail << "[A m=" << m << " sum != 1] ";
        }
    }
    for (unsigned g = 1; g <= 12; ++g) {
        mpq_class total = 0;
        for (const auto& f : enumerate_classes(GroupSpec{Family::C, g}).fractions) total += f;
        if (total != 1) {
            out.pass = false;
            detail << "[C g=" << g << " sum != 1] ";
        }
    }
    detail << "fraction sums exact; ";
    // brute-force class counts
    for (unsigned m = 2; m <= 8; ++m) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::A, m});
        std::map<WeylClass, unsigned long> counts;
        for (const auto& el : brute_force_group(GroupSpec{Family::A, m})) ++counts[el.cls];
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (mpq_class(counts[t.classes[i]]) != t.fractions[i] * mpq_class(t.weyl_order)) {
                out.pass = false;
                detail << "[A m=" << m << " count mismatch] ";
            }
        }
    }
    for (unsigned g = 1; g <= 5; ++g) {
        const ClassTable t = enumerate_classes(GroupSpec{Family::C, g});
        std::map<WeylClass, unsigned long> counts;
        for (const auto& el : brute_force_group(GroupSpec{Family::C, g})) ++counts[el.cls];
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (mpq_class(counts[t.classes[i]]) != t.fractions[i] * mpq_class(t.weyl_order)) {
                out.pass = false;
                detail << "[C g=" << g << " count mismatch] ";
            }
        }
    }
    detail << "brute-force counts match; ";
    // palindromic invariant on 1000 Sp walks
    WalkConfig sp;
    sp.group = parse_group("Sp(4)");
    sp.master_seed = 4242;
    sp.length = 40;
    sp.validate_and_fill();
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const WalkState state = run_walk(sp, trial);
        if (!charpoly_exact(*state.exact).is_palindromic()) {
            out.pass = false;
            detail << "[non-palindromic Sp walk at trial " << trial << "] ";
            break;
        }
    }
    detail << "1000 Sp walks palindromic; ";
    // byte-identical survey JSONL across reruns and thread counts
    WalkConfig survey_config;
    survey_config.group = parse_group("SL(3)");
    survey_config.master_seed = 1234;
    survey_config.mode = WalkMode::Modular;
    survey_config.primes = primes_from(2, 40);
    const SurveyResult ra = survey(survey_config, {8, 16}, 25, CertifyOptions{40, 2}, 1);
    const SurveyResult rb = survey(survey_config, {8, 16}, 25, CertifyOptions{40, 2}, 3);
    std::ostringstream ja, jb;
    write_survey_jsonl(ja, ra, false);
    write_survey_jsonl(jb, rb, false);
    if (ja.str() != jb.str()) {
        out.pass = false;
        detail << "[JSONL differs between identical-seed runs] ";
    } else {
        detail << "JSONL byte-identical across reruns";
    }
    out.detail = detail.str();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Check> checks = {
        {1, "SL(2) equidistribution census, q in {11,23,47,101}", 60, criterion_equidistribution_sl2},
        {2, "SL(3) sampled census, 1e6 samples at q in {7,13,31}", 120, criterion_census_sl3},
        {3, "Sp(4, F_3) full BFS census", 60, criterion_census_sp4},
        {4, "regular-semisimple density trend in SL(2)", 60, criterion_rs_density},
        {5, "Jordan pipeline ground truth (T^3 - T - 1)", 1, criterion_jordan_ground_truth},
        {6, "SL(3) survey convergence, n = 10..100", 600, criterion_survey_sl3},
        {7, "Sp(4) survey at n = 60", 600, criterion_survey_sp4},
        {8, "cross-mode charpoly oracle, 100 walks x 20 primes", 120, criterion_cross_mode},
        {9, "coset chain large-deviation bound", 60, criterion_chain_bound},
        {10, "torus demo sqrt(n) P(S_n = 0) at n = 1e4", 10, criterion_torus},
        {11, "invariant suites (fractions, brute force, palindromic, reproducibility)", 300,
         criterion_invariants},
    };

    int failures = 0;
    for (const auto& check : checks) {
        if (only != 0 && check.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > check.time_limit_s) {
            outcome.pass = false;
            outcome.detail += " [runtime " + std::to_string(elapsed) + "s exceeds " +
                              std::to_string(check.time_limit_s) + "s]";
        }
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << check.id << ": "
                  << check.title << " (" << elapsed << "s)";
        if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
        std::cout << "\n" << std::flush;
        if (!outcome.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
