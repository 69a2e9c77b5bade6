// weylwalk: random walks on SL(m,Z) / Sp(2g,Z), Galois-group certification
// of characteristic-polynomial splitting fields via Frobenius sampling, and
// the supporting finite-field censuses and coset-chain diagnostics.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylwalk/census.hpp"
#include "weylwalk/chain.hpp"
#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/harness.hpp"
#include "weylwalk/io.hpp"
#include "weylwalk/parallel.hpp"

using namespace weylwalk;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned threads = 0;
    std::string out;
    std::string format = "csv";
};

// stdout unless --out was given
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            require(file_.good(), "cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<std::size_t> parse_grid(const std::string& text) {
    // "a:b:step" or comma-separated values
    std::vector<std::size_t> grid;
    if (text.find(':') != std::string::npos) {
        std::size_t a = 0, b = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(text);
        ss >> a >> c1 >> b >> c2 >> step;
        require(!ss.fail() && c1 == ':' && c2 == ':' && step > 0 && a <= b,
                "bad grid '" + text + "' (want a:b:step)");
        for (std::size_t n = a; n <= b; n += step) grid.push_back(n);
        return grid;
    }
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            grid.push_back(std::stoull(tok));
        } catch (const std::exception&) {
            throw config_error("bad grid entry '" + tok + "'");
        }
    }
    require(!grid.empty(), "empty grid");
    return grid;
}

std::uint64_t default_prime_min(const GroupSpec& group) {
    // p = 2, 3 show edge behavior for the symplectic pipeline
    return group.family == Family::C ? 5 : 2;
}

WalkConfig load_config(const std::string& path, const GlobalOptions& global) {
    WalkConfig config = load_walk_config(path);
    if (global.seed_set) config.master_seed = global.seed;
    return config;
}

json walk_state_json(const WalkConfig& config, const WalkState& state) {
    json j;
    j["n"] = state.steps;
    const WalkCharpoly cp = walk_charpoly(state);
    if (state.exact) {
        std::ostringstream m;
        write_matrix(m, *state.exact);
        j["matrix"] = m.str();
        j["charpoly"] = poly_to_string(*cp.exact);
        j["max_entry_bits"] = state.max_entry_bits;
    }
    if (!state.modular.empty()) {
        json mods = json::array();
        for (std::size_t k = 0; k < state.modular.size(); ++k) {
            json one;
            one["p"] = config.primes[k];
            one["charpoly"] = poly_to_string(cp.modular[k]);
            mods.push_back(std::move(one));
        }
        j["modular"] = std::move(mods);
    }
    return j;
}

json certify_json(const CertifyResult& result) {
    json j = json::parse(certificate_to_json(result.cert));
    j["primes_used"] = result.primes_used;
    json obs = json::array();
    for (const auto& o : result.observations) obs.push_back(json::parse(observation_to_json(o)));
    j["observations"] = std::move(obs);
    return j;
}

int run_walk_cmd(const GlobalOptions& global, const std::string& config_path,
                 std::uint64_t trial, long length_override) {
    WalkConfig config = load_config(config_path, global);
    if (length_override >= 0) config.length = static_cast<std::size_t>(length_override);
    const WalkState state = run_walk(config, trial);
    Output out(global.out);
    out.stream() << walk_state_json(config, state).dump(2) << "\n";
    return 0;
}

int run_galois_cmd(const GlobalOptions& global, const std::string& config_path,
                   const std::string& matrix_path, const std::string& group_name,
                   std::uint64_t trial, long length_override, std::size_t budget,
                   long prime_min) {
    Output out(global.out);
    CertifyResult result;
    if (!matrix_path.empty()) {
        require(!group_name.empty(), "galois: --matrix needs --group");
        const GroupSpec group = parse_group(group_name);
        const IntMatrix m = read_matrix_file(matrix_path);
        require(group_contains(group, m), "galois: matrix is not in " + group.name());
        CertifyOptions options{budget == 0 ? 25 : budget,
                               prime_min >= 0 ? static_cast<std::uint64_t>(prime_min)
                                              : default_prime_min(group)};
        RngStream rng(global.seed_set ? global.seed : 0);
        result = galois_certify(m, group, options, rng);
    } else {
        require(!config_path.empty(), "galois: give --matrix or --config");
        WalkConfig config = load_config(config_path, global);
        if (length_override >= 0) config.length = static_cast<std::size_t>(length_override);
        const WalkState state = run_walk(config, trial);
        RngStream rng = RngStream::substream(config.master_seed ^ 0xC3A5C85C97CB3127ull, trial);
        if (config.mode == WalkMode::Modular) {
            result = galois_certify_modular(state.modular, config.primes, config.group,
                                            budget == 0 ? config.primes.size() : budget, rng);
        } else {
            CertifyOptions options{budget == 0 ? 25 : budget,
                                   prime_min >= 0 ? static_cast<std::uint64_t>(prime_min)
                                                  : default_prime_min(config.group)};
            result = galois_certify(*state.exact, config.group, options, rng);
        }
    }
    out.stream() << certify_json(result).dump(2) << "\n";
    return 0;
}

int run_survey_cmd(const GlobalOptions& global, const std::string& config_path,
                   const std::string& grid_text, std::uint64_t trials, std::size_t budget,
                   const std::string& jsonl_path, bool timings) {
    const WalkConfig config = load_config(config_path, global);
    const std::vector<std::size_t> grid = parse_grid(grid_text);
    const unsigned threads = global.threads ? global.threads : default_thread_count();
    CertifyOptions options{budget, default_prime_min(config.group)};
    const SurveyResult result = survey(config, grid, trials, options, threads);
    if (!jsonl_path.empty()) {
        std::ofstream jf(jsonl_path);
        require(jf.good(), "cannot open jsonl file: " + jsonl_path);
        write_survey_jsonl(jf, result, timings);
    }
    Output out(global.out);
    if (global.format == "json") {
        json j;
        j["points"] = json::array();
        for (const auto& p : result.points) {
            json point;
            point["n"] = p.n;
            point["trials"] = p.trials;
            point["certified"] = p.certified;
            point["fraction"] = p.fraction;
            point["wilson_lo"] = p.wilson_lo;
            point["wilson_hi"] = p.wilson_hi;
            point["mean_primes"] = p.mean_primes;
            j["points"].push_back(std::move(point));
        }
        if (result.decay_rate) j["decay_rate"] = *result.decay_rate;
        out.stream() << j.dump(2) << "\n";
    } else {
        write_survey_csv(out.stream(), result);
        if (result.decay_rate) {
            out.stream() << "# fitted decay rate c = " << *result.decay_rate << "\n";
        } else if (!result.points.empty() && result.points.back().fraction == 1.0) {
            // nothing to fit when every trial certifies; report the one-sided bound
            out.stream() << "# all trials certified at n = " << result.points.back().n
                         << "; fraction >= " << result.points.back().wilson_lo
                         << " (95% Wilson)\n";
        }
    }
    return 0;
}

int run_tau_cmd(const GlobalOptions& global, const std::string& config_path,
                std::uint64_t trials, std::size_t n_max, std::size_t budget) {
    const WalkConfig config = load_config(config_path, global);
    const unsigned threads = global.threads ? global.threads : default_thread_count();
    const auto samples = estimate_tau(config, trials, n_max,
                                      budget == 0 ? config.primes.size() : budget, threads);
    Output out(global.out);
    if (global.format == "json") {
        json j = json::array();
        for (const auto& s : samples) {
            json one;
            one["trial"] = s.trial;
            one["censored"] = s.censored;
            if (!s.censored) one["tau"] = s.tau;
            j.push_back(std::move(one));
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        write_tau_csv(out.stream(), samples);
    }
    return 0;
}

int run_equidist_cmd(const GlobalOptions& global, const std::string& group_name,
                     const std::string& q_list, const std::string& mode_name,
                     std::uint64_t samples) {
    const GroupSpec group = parse_group(group_name);
    Output out(global.out);
    bool csv_header = false;
    for (std::size_t q : parse_grid(q_list)) {
        CensusMode mode = CensusMode::enumerate();
        if (mode_name == "sample") {
            require(samples > 0, "equidist: --samples required in sample mode");
            mode = CensusMode::sample(samples);
        } else {
            require(mode_name == "enumerate", "equidist: mode must be enumerate or sample");
        }
        const CensusReport report =
            run_census(group, q, mode, global.seed_set ? global.seed : 0,
                       global.threads ? global.threads : default_thread_count());
        if (global.format == "json") {
            out.stream() << census_report_to_json(report) << "\n";
        } else {
            if (!csv_header) {
                out.stream() << "q,class,count,total,frequency,target,deviation,rs_fraction\n";
                csv_header = true;
            }
            for (std::size_t i = 0; i < report.table.size(); ++i) {
                out.stream() << q << ",\"" << report.table.classes[i].to_string() << "\","
                             << report.class_counts[i] << ',' << report.total << ','
                             << report.frequency(i) << ','
                             << rational_to_string(report.table.fractions[i]) << ','
                             << report.deviation(i) << ',' << report.rs_fraction() << "\n";
            }
        }
    }
    return 0;
}

int run_chain_cmd(const GlobalOptions& global, const std::string& spec_path,
                  const std::string& grid_text, std::uint64_t trials) {
    const ChainSpec spec = load_chain_spec(spec_path);
    std::vector<std::uint64_t> grid;
    for (std::size_t n : parse_grid(grid_text)) grid.push_back(n);
    const DeviationReport report =
        simulate_iota(spec, grid, trials, global.seed_set ? global.seed : 0);
    Output out(global.out);
    if (global.format == "json") {
        json j;
        j["beta"] = report.beta;
        j["trials"] = report.trials;
        j["rows"] = json::array();
        for (std::size_t i = 0; i < report.n_grid.size(); ++i) {
            json row;
            row["n"] = report.n_grid[i];
            row["empirical"] = report.empirical[i];
            row["bound"] = report.bound[i];
            j["rows"].push_back(std::move(row));
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        write_deviation_csv(out.stream(), report);
    }
    return 0;
}

int run_torus_cmd(const GlobalOptions& global, const std::string& grid_text,
                  const std::string& mode_name, std::uint64_t trials) {
    std::vector<std::uint64_t> ns;
    for (std::size_t n : parse_grid(grid_text)) ns.push_back(n);
    TorusMode mode;
    if (mode_name == "dp") mode = TorusMode::ExactDP;
    else if (mode_name == "mc") mode = TorusMode::MonteCarlo;
    else throw config_error("torus-demo: mode must be dp or mc");
    const auto rows = torus_demo(ns, mode, trials, global.seed_set ? global.seed : 0);
    Output out(global.out);
    if (global.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            json row;
            row["n"] = r.n;
            row["probability"] = r.probability;
            if (mode == TorusMode::ExactDP) row["exact"] = rational_to_string(r.exact);
            row["sqrt_n_scaled"] = r.sqrt_n_scaled;
            j.push_back(std::move(row));
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        write_torus_csv(out.stream(), rows);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random walks on arithmetic groups and Weyl-group Galois certification"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--seed", global.seed, "master seed (overrides config seeds)")
        ->each([&](const std::string&) { global.seed_set = true; });
    app.add_option("--threads", global.threads, "worker threads (default: hardware)");
    app.add_option("--out", global.out, "output file (default: stdout)");
    app.add_option("--format", global.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string config_path, matrix_path, group_name, grid_text, spec_path, mode_name, q_list;
    std::string jsonl_path;
    std::uint64_t trial = 0, trials = 100, samples = 0;
    long length_override = -1, prime_min = -1;
    std::size_t budget = 0, n_max = 100;
    bool timings = false;

    CLI::App* walk = app.add_subcommand("walk", "run one random walk, print its state");
    walk->add_option("--config", config_path, "walk config JSON")->required();
    walk->add_option("--trial", trial, "trial index (default 0)");
    walk->add_option("--length", length_override, "override walk length");

    CLI::App* galois = app.add_subcommand("galois", "certify the Galois group of one element");
    galois->add_option("--config", config_path, "walk config JSON");
    galois->add_option("--matrix", matrix_path, "matrix text file");
    galois->add_option("--group", group_name, "group for --matrix, e.g. SL(3)");
    galois->add_option("--trial", trial, "trial index for --config");
    galois->add_option("--length", length_override, "override walk length");
    galois->add_option("--primes", budget, "prime budget (default: carried primes or 25)");
    galois->add_option("--prime-min", prime_min, "first prime floor (default 2, type C: 5)");

    CLI::App* survey_cmd = app.add_subcommand("survey", "certified fraction over a length grid");
    survey_cmd->add_option("--config", config_path, "walk config JSON")->required();
    survey_cmd->add_option("--n-grid", grid_text, "lengths: a:b:step or comma list")->required();
    survey_cmd->add_option("--trials", trials, "trials per length")->required();
    survey_cmd->add_option("--primes", budget, "prime budget")->required();
    survey_cmd->add_option("--jsonl", jsonl_path, "write per-trial records here");
    survey_cmd->add_flag("--timings", timings, "include wall_ms in the JSONL records");

    CLI::App* tau = app.add_subcommand("tau", "first certification time per trial");
    tau->add_option("--config", config_path, "walk config JSON (modular mode)")->required();
    tau->add_option("--trials", trials, "number of walks")->required();
    tau->add_option("--n-max", n_max, "prefix horizon")->required();
    tau->add_option("--primes", budget, "prime budget (default: all carried)");

    CLI::App* equidist = app.add_subcommand("equidist", "theta census over G(F_q)");
    equidist->add_option("--group", group_name, "SL(m) or Sp(2g)")->required();
    equidist->add_option("--q", q_list, "primes: comma list or a:b:step")->required();
    equidist->add_option("--mode", mode_name, "enumerate or sample")->required();
    equidist->add_option("--samples", samples, "sample count (sample mode)");

    CLI::App* chain_cmd = app.add_subcommand("chain", "coset chain deviations vs the bound");
    chain_cmd->add_option("--spec", spec_path, "chain spec JSON")->required();
    chain_cmd->add_option("--n-grid", grid_text, "grid: a:b:step or comma list")->required();
    chain_cmd->add_option("--trials", trials, "Monte Carlo trials")->required();

    CLI::App* torus = app.add_subcommand("torus-demo", "P(S_n = 0) for the +-1/0 torus walk");
    torus->add_option("--n", grid_text, "values of n: comma list or a:b:step")->required();
    torus->add_option("--mode", mode_name, "dp (exact) or mc")->required();
    torus->add_option("--trials", trials, "Monte Carlo trials");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(walk))
            return run_walk_cmd(global, config_path, trial, length_override);
        if (app.got_subcommand(galois))
            return run_galois_cmd(global, config_path, matrix_path, group_name, trial,
                                  length_override, budget, prime_min);
        if (app.got_subcommand(survey_cmd))
            return run_survey_cmd(global, config_path, grid_text, trials, budget, jsonl_path,
                                  timings);
        if (app.got_subcommand(tau))
            return run_tau_cmd(global, config_path, trials, n_max, budget);
        if (app.got_subcommand(equidist))
            return run_equidist_cmd(global, group_name, q_list, mode_name, samples);
        if (app.got_subcommand(chain_cmd))
            return run_chain_cmd(global, spec_path, grid_text, trials);
        if (app.got_subcommand(torus))
            return run_torus_cmd(global, grid_text, mode_name, trials);
        throw config_error("no subcommand");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
