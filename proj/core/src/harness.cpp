#include "weylwalk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/parallel.hpp"
#include "weylwalk/stats.hpp"

namespace weylwalk {

namespace {

constexpr std::uint64_t kCertifySalt = 0xC3A5C85C97CB3127ull;

Certificate degenerate_certificate(const ClassTable& table) {
    Certificate cert;
    cert.verdict = Certificate::Verdict::Degenerate;
    cert.missing = table.classes;
    return cert;
}

} // namespace

CertifyResult galois_certify(const IntMatrix& M, const GroupSpec& group,
                             const CertifyOptions& options, RngStream& rng) {
    require(options.prime_budget >= 1, "galois_certify: prime budget must be >= 1");
    const ClassTable table = enumerate_classes(GroupSpec{group.family, group.rank});
    CertifyResult result;

    const IntPoly P = charpoly_exact(M);
    if (discriminant(P) == 0) {
        result.cert = degenerate_certificate(table);
        return result;
    }

    std::set<WeylClass> observed;
    std::uint64_t p = options.prime_min;
    for (std::size_t k = 0; k < options.prime_budget; ++k) {
        p = next_prime(p);
        FrobeniusObservation obs;
        if (group.family == Family::C && p == 2) {
            obs = {p, FrobStatus::WrongCharacteristic, std::nullopt};
        } else {
            obs = classify_poly(P.reduce(p), group, rng);
        }
        if (obs.status == FrobStatus::Good) observed.insert(*obs.cls);
        result.observations.push_back(std::move(obs));
        ++p;
        if (observed.size() == table.size()) break;
    }
    result.primes_used = result.observations.size();
    result.cert = jordan_certificate(table, observed);
    return result;
}

CertifyResult galois_certify_modular(std::span<const ModMatrix> components,
                                     std::span<const std::uint64_t> primes,
                                     const GroupSpec& group, std::size_t prime_budget,
                                     RngStream& rng) {
    check_invariant(components.size() == primes.size(),
                    "galois_certify_modular: components / primes mismatch");
    require(prime_budget >= 1, "galois_certify_modular: prime budget must be >= 1");
    require(prime_budget <= primes.size(),
            "galois_certify_modular: budget exceeds the carried primes");
    const ClassTable table = enumerate_classes(GroupSpec{group.family, group.rank});
    CertifyResult result;

    std::set<WeylClass> observed;
    bool all_not_squarefree = true;
    for (std::size_t k = 0; k < prime_budget; ++k) {
        FrobeniusObservation obs = classify_modular(components[k], group, rng);
        if (obs.status != FrobStatus::NotSquarefree) all_not_squarefree = false;
        if (obs.status == FrobStatus::Good) observed.insert(*obs.cls);
        result.observations.push_back(std::move(obs));
        if (observed.size() == table.size()) break;
    }
    result.primes_used = result.observations.size();
    if (result.primes_used == prime_budget && all_not_squarefree) {
        result.cert = degenerate_certificate(table);
    } else {
        result.cert = jordan_certificate(table, observed);
    }
    return result;
}

SurveyResult survey(const WalkConfig& base, const std::vector<std::size_t>& n_grid,
                    std::uint64_t trials, const CertifyOptions& options, unsigned threads) {
    WalkConfig config = base;
    config.validate_and_fill();
    if (config.mode != WalkMode::Exact) {
        require(options.prime_budget <= config.primes.size(),
                "survey: prime budget exceeds the primes carried by the walk config");
    }
    std::vector<std::size_t> grid = n_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    require(!grid.empty(), "survey: empty n grid");

    SurveyResult result;
    result.table = enumerate_classes(GroupSpec{config.group.family, config.group.rank});
    result.records.resize(grid.size() * trials);

    parallel_for(0, grid.size() * trials, threads, [&](std::uint64_t idx) {
        const std::size_t gi = static_cast<std::size_t>(idx / trials);
        const std::uint64_t trial = idx % trials;
        const std::size_t n = grid[gi];

        const auto t0 = std::chrono::steady_clock::now();
        WalkConfig cfg = config;
        cfg.master_seed = mix64(config.master_seed, n);
        cfg.length = n;
        WalkDriver driver(cfg, trial);
        for (std::size_t s = 0; s < n; ++s) driver.step();

        RngStream cert_rng = RngStream::substream(mix64(cfg.master_seed ^ kCertifySalt, trial), n);
        CertifyResult cr;
        if (config.mode == WalkMode::Exact) {
            cr = galois_certify(*driver.state().exact, config.group, options, cert_rng);
        } else {
            cr = galois_certify_modular(driver.state().modular, cfg.primes, config.group,
                                        options.prime_budget, cert_rng);
        }
        const auto t1 = std::chrono::steady_clock::now();

        TrialRecord& rec = result.records[idx];
        rec.trial = trial;
        rec.n = n;
        rec.cert = std::move(cr.cert);
        rec.primes_used = cr.primes_used;
        rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    });

    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        SurveyPoint point;
        point.n = grid[gi];
        point.trials = trials;
        point.observed_histogram.assign(result.table.size(), 0);
        double primes_sum = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const TrialRecord& rec = result.records[gi * trials + t];
            if (rec.cert.verdict == Certificate::Verdict::ProvenFullWeyl) ++point.certified;
            primes_sum += static_cast<double>(rec.primes_used);
            for (const auto& cls : rec.cert.observed)
                ++point.observed_histogram[result.table.index_of(cls)];
        }
        if (trials > 0) {
            point.fraction = static_cast<double>(point.certified) / static_cast<double>(trials);
            const WilsonInterval w = wilson_interval(point.certified, trials);
            point.wilson_lo = w.lo;
            point.wilson_hi = w.hi;
            point.mean_primes = primes_sum / static_cast<double>(trials);
        }
        result.points.push_back(std::move(point));
    }

    std::vector<double> xs, ys;
    for (const auto& point : result.points) {
        if (point.fraction > 0 && point.fraction < 1) {
            xs.push_back(static_cast<double>(point.n));
            ys.push_back(std::log(1.0 - point.fraction));
        }
    }
    if (xs.size() >= 2) {
        const LinearFit fit = linear_fit(xs, ys);
        if (fit.slope < 0) result.decay_rate = std::exp(-fit.slope);
    }
    return result;
}

std::vector<TauSample> estimate_tau(const WalkConfig& config, std::uint64_t trials,
                                    std::size_t n_max, std::size_t prime_budget,
                                    unsigned threads) {
    WalkConfig cfg = config;
    cfg.validate_and_fill();
    require(cfg.mode == WalkMode::Modular,
            "estimate_tau: modular mode required (exact prefix scans are prohibitively slow)");
    require(prime_budget >= 1 && prime_budget <= cfg.primes.size(),
            "estimate_tau: prime budget exceeds the carried primes");
    require(n_max >= 1, "estimate_tau: n_max must be >= 1");

    std::vector<TauSample> samples(trials);
    parallel_for(0, trials, threads, [&](std::uint64_t trial) {
        WalkDriver driver(cfg, trial);
        TauSample sample;
        sample.trial = trial;
        sample.censored = true;
        for (std::size_t n = 1; n <= n_max; ++n) {
            driver.step();
            RngStream cert_rng =
                RngStream::substream(mix64(cfg.master_seed ^ kCertifySalt, trial), n);
            const CertifyResult cr = galois_certify_modular(
                driver.state().modular, cfg.primes, cfg.group, prime_budget, cert_rng);
            if (cr.cert.verdict == Certificate::Verdict::ProvenFullWeyl) {
                sample.tau = n;
                sample.censored = false;
                break;
            }
        }
        samples[trial] = std::move(sample);
    });
    return samples;
}

std::vector<mpz_class> torus_zero_counts(std::uint64_t n_max) {
    // T_0 = T_1 = 1, n T_n = (2n-1) T_{n-1} + 3(n-1) T_{n-2}; the division
    // is exact since T_n counts sequences.
    std::vector<mpz_class> t(n_max + 1);
    t[0] = 1;
    if (n_max >= 1) t[1] = 1;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        mpz_class num = (2 * n - 1) * t[n - 1] + 3 * (n - 1) * t[n - 2];
        mpz_divexact_ui(t[n].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
    }
    return t;
}

std::vector<TorusRow> torus_demo(const std::vector<std::uint64_t>& ns, TorusMode mode,
                                 std::uint64_t trials, std::uint64_t seed) {
    require(!ns.empty(), "torus_demo: empty n list");
    std::vector<std::uint64_t> grid = ns;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const std::uint64_t n_max = grid.back();

    std::vector<TorusRow> rows;
    if (mode == TorusMode::ExactDP) {
        const std::vector<mpz_class> counts = torus_zero_counts(n_max);
        mpz_class pow3 = 1;
        std::size_t gi = 0;
        for (std::uint64_t n = 0; n <= n_max && gi < grid.size(); ++n) {
            if (n > 0) pow3 *= 3;
            if (grid[gi] != n) continue;
            TorusRow row;
            row.n = n;
            row.exact = mpq_class(counts[n], pow3);
            row.exact.canonicalize();
            row.probability = row.exact.get_d();
            row.sqrt_n_scaled = std::sqrt(static_cast<double>(n)) * row.probability;
            rows.push_back(std::move(row));
            ++gi;
        }
    } else {
        require(trials >= 1, "torus_demo: Monte Carlo needs trials >= 1");
        std::vector<std::uint64_t> hits(grid.size(), 0);
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            RngStream rng = RngStream::substream(seed, trial);
            std::int64_t sum = 0;
            std::size_t gi = 0;
            while (gi < grid.size() && grid[gi] == 0) {
                ++hits[gi]; // S_0 = 0 always
                ++gi;
            }
            for (std::uint64_t n = 1; n <= n_max && gi < grid.size(); ++n) {
                sum += static_cast<std::int64_t>(rng.below(3)) - 1;
                while (gi < grid.size() && grid[gi] == n) {
                    if (sum == 0) ++hits[gi];
                    ++gi;
                }
            }
        }
        for (std::size_t k = 0; k < grid.size(); ++k) {
            TorusRow row;
            row.n = grid[k];
            row.probability = static_cast<double>(hits[k]) / static_cast<double>(trials);
            row.sqrt_n_scaled = std::sqrt(static_cast<double>(row.n)) * row.probability;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<DecayRow> nonreg_decay(const WalkConfig& config,
                                   const std::vector<std::size_t>& n_grid, std::uint64_t trials,
                                   unsigned threads) {
    WalkConfig cfg = config;
    cfg.validate_and_fill();
    if (cfg.mode != WalkMode::Exact) {
        require(cfg.primes.size() >= 10,
                "nonreg_decay: modular mode needs >= 10 primes as a non-regularity proxy");
    }
    std::vector<std::size_t> grid = n_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    require(!grid.empty(), "nonreg_decay: empty n grid");
    require(trials >= 1, "nonreg_decay: trials must be >= 1");

    std::vector<std::uint8_t> nonreg(grid.size() * trials, 0);
    parallel_for(0, grid.size() * trials, threads, [&](std::uint64_t idx) {
        const std::size_t gi = static_cast<std::size_t>(idx / trials);
        const std::uint64_t trial = idx % trials;
        WalkConfig local = cfg;
        local.master_seed = mix64(cfg.master_seed, grid[gi]);
        local.length = grid[gi];
        const WalkState state = run_walk(local, trial);
        bool bad;
        if (state.exact) {
            bad = discriminant(charpoly_exact(*state.exact)) == 0;
        } else {
            bad = true;
            for (const auto& comp : state.modular) {
                if (squarefree_mod(charpoly_mod(comp))) {
                    bad = false;
                    break;
                }
            }
        }
        nonreg[idx] = bad ? 1 : 0;
    });

    std::vector<DecayRow> rows;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        DecayRow row;
        row.n = grid[gi];
        row.trials = trials;
        for (std::uint64_t t = 0; t < trials; ++t) row.nonregular += nonreg[gi * trials + t];
        row.fraction = static_cast<double>(row.nonregular) / static_cast<double>(trials);
        rows.push_back(row);
    }
    return rows;
}

} // namespace weylwalk
