#include "weylwalk/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"

namespace weylwalk {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string dir_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json weyl_class_json(const WeylClass& c) {
    json j;
    if (c.family == Family::A) {
        j["type"] = "A";
        j["parts"] = c.parts;
    } else {
        j["type"] = "C";
        j["pos"] = c.pos;
        j["neg"] = c.neg;
    }
    return j;
}

WeylClass weyl_class_from(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "A") return WeylClass::type_a(j.at("parts").get<std::vector<unsigned>>());
    if (type == "C")
        return WeylClass::type_c(j.at("pos").get<std::vector<unsigned>>(),
                                 j.at("neg").get<std::vector<unsigned>>());
    throw config_error("weyl class: unknown type " + type);
}

json observation_json(const FrobeniusObservation& obs) {
    json j;
    j["p"] = obs.prime;
    j["status"] = status_name(obs.status);
    if (obs.cls) j["class"] = weyl_class_json(*obs.cls);
    return j;
}

json certificate_json(const Certificate& cert) {
    json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["observed"] = json::array();
    for (const auto& c : cert.observed) j["observed"].push_back(weyl_class_json(c));
    j["missing"] = json::array();
    for (const auto& c : cert.missing) j["missing"].push_back(weyl_class_json(c));
    return j;
}

} // namespace

IntMatrix read_matrix(std::istream& in) {
    std::size_t dim = 0;
    require(static_cast<bool>(in >> dim) && dim >= 1, "matrix: bad dimension line");
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::string tok;
            require(static_cast<bool>(in >> tok), "matrix: missing entries");
            try {
                m.at(i, j) = mpz_class(tok);
            } catch (const std::invalid_argument&) {
                throw config_error("matrix: bad integer '" + tok + "'");
            }
        }
    }
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.dim() << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).get_str();
        }
        out << "\n";
    }
}

IntPoly read_poly(std::istream& in) {
    std::vector<mpz_class> coeffs;
    std::string tok;
    while (in >> tok) {
        try {
            coeffs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw config_error("poly: bad integer '" + tok + "'");
        }
    }
    require(!coeffs.empty(), "poly: no coefficients");
    return IntPoly(std::move(coeffs));
}

std::string poly_to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += p.coeffs()[i].get_str();
    }
    return s;
}

std::string poly_to_string(const ModPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.coeffs()[i]);
    }
    return s;
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
    try {
        mpq_class q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw config_error("bad rational: '" + text + "'");
    }
}

std::string weyl_class_to_json(const WeylClass& c) { return weyl_class_json(c).dump(); }

WeylClass weyl_class_from_json(const std::string& text) {
    try {
        return weyl_class_from(json::parse(text));
    } catch (const json::exception& e) {
        throw config_error(std::string("weyl class json: ") + e.what());
    }
}

std::string observation_to_json(const FrobeniusObservation& obs) {
    return observation_json(obs).dump();
}

std::string certificate_to_json(const Certificate& cert) {
    return certificate_json(cert).dump();
}

WalkConfig parse_walk_config(const std::string& json_text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw config_error(std::string("walk config: ") + e.what());
    }
    try {
        WalkConfig config;
        config.group = parse_group(j.at("group").get<std::string>());
        if (j.contains("generators")) {
            for (const auto& g : j.at("generators")) {
                Generator gen{read_matrix_file(base_dir + "/" + g.at("file").get<std::string>()),
                              g.at("label").get<std::string>()};
                config.generators.push_back(std::move(gen));
            }
        }
        if (j.contains("weights")) {
            for (const auto& w : j.at("weights"))
                config.weights.push_back(rational_from_string(w.get<std::string>()));
        }
        config.length = j.value("length", 0u);
        config.master_seed = j.value("seed", 0ull);
        const std::string mode = j.value("mode", "exact");
        if (mode == "exact") config.mode = WalkMode::Exact;
        else if (mode == "modular") config.mode = WalkMode::Modular;
        else if (mode == "dual") config.mode = WalkMode::Dual;
        else throw config_error("walk config: unknown mode " + mode);
        if (j.contains("primes")) {
            PrimeRequest request;
            const auto& pj = j.at("primes");
            if (pj.is_array()) {
                request.explicit_primes = pj.get<std::vector<std::uint64_t>>();
            } else {
                request.count = pj.at("first").get<std::size_t>();
                request.min = pj.value("min", 2ull);
            }
            config.primes = request.resolve();
        }
        config.membership_check_stride = j.value("membership_check_stride", 64u);
        config.trace_limit = j.value("trace_limit", 0u);
        config.validate_and_fill();
        return config;
    } catch (const json::exception& e) {
        throw config_error(std::string("walk config: ") + e.what());
    }
}

WalkConfig load_walk_config(const std::string& path) {
    return parse_walk_config(read_file(path), dir_of(path));
}

ChainSpec parse_chain_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw config_error(std::string("chain spec: ") + e.what());
    }
    try {
        ChainSpec spec;
        spec.states = j.at("states").get<std::vector<std::string>>();
        for (const auto& row : j.at("kernel")) {
            std::vector<mpq_class> r;
            for (const auto& cell : row) r.push_back(rational_from_string(cell.get<std::string>()));
            spec.kernel.push_back(std::move(r));
        }
        spec.start = j.value("start", 0u);
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw config_error(std::string("chain spec: ") + e.what());
    }
}

ChainSpec load_chain_spec(const std::string& path) { return parse_chain_spec(read_file(path)); }

std::string chain_spec_to_json(const ChainSpec& spec) {
    json j;
    j["states"] = spec.states;
    j["kernel"] = json::array();
    for (const auto& row : spec.kernel) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(rational_to_string(cell));
        j["kernel"].push_back(std::move(r));
    }
    j["start"] = spec.start;
    return j.dump();
}

std::string census_report_to_json(const CensusReport& report) {
    json j;
    j["group"] = report.group.name();
    j["q"] = report.q;
    j["mode"] = report.mode.kind == CensusMode::Kind::Enumerate ? "enumerate" : "sample";
    if (report.mode.kind == CensusMode::Kind::Sample) j["samples"] = report.mode.samples;
    j["total"] = report.total;
    j["rs"] = report.rs;
    j["rs_fraction"] = report.rs_fraction();
    // simply connected groups: the coset refinement is a no-op, one coset
    j["cosets"] = 1;
    json classes = json::array();
    for (std::size_t i = 0; i < report.table.size(); ++i) {
        json c;
        c["class"] = json::parse(weyl_class_to_json(report.table.classes[i]));
        c["count"] = report.class_counts[i];
        c["target"] = rational_to_string(report.table.fractions[i]);
        c["target_float"] = report.table.fractions[i].get_d();
        c["frequency"] = report.frequency(i);
        c["deviation"] = report.deviation(i);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    j["max_deviation"] = report.max_deviation();
    return j.dump();
}

void write_survey_jsonl(std::ostream& out, const SurveyResult& result, bool with_timings) {
    for (const auto& rec : result.records) {
        json j;
        j["trial"] = rec.trial;
        j["n"] = rec.n;
        j["verdict"] = verdict_name(rec.cert.verdict);
        j["observed"] = json::array();
        for (const auto& c : rec.cert.observed) j["observed"].push_back(weyl_class_json(c));
        j["missing"] = json::array();
        for (const auto& c : rec.cert.missing) j["missing"].push_back(weyl_class_json(c));
        j["primes_used"] = rec.primes_used;
        if (with_timings) j["wall_ms"] = rec.wall_ms;
        out << j.dump() << "\n";
    }
}

void write_survey_csv(std::ostream& out, const SurveyResult& result) {
    out << "n,trials,certified,fraction,wilson_lo,wilson_hi,mean_primes\n";
    for (const auto& p : result.points) {
        out << p.n << ',' << p.trials << ',' << p.certified << ',' << format_double(p.fraction)
            << ',' << format_double(p.wilson_lo) << ',' << format_double(p.wilson_hi) << ','
            << format_double(p.mean_primes) << "\n";
    }
}

void write_deviation_csv(std::ostream& out, const DeviationReport& report) {
    out << "n,empirical,bound,beta\n";
    for (std::size_t i = 0; i < report.n_grid.size(); ++i) {
        out << report.n_grid[i] << ',' << format_double(report.empirical[i]) << ','
            << format_double(report.bound[i]) << ',' << format_double(report.beta) << "\n";
    }
}

void write_tau_csv(std::ostream& out, const std::vector<TauSample>& samples) {
    out << "trial,tau,censored\n";
    for (const auto& s : samples) {
        out << s.trial << ',';
        if (s.censored) out << ",1\n";
        else out << s.tau << ",0\n";
    }
}

void write_torus_csv(std::ostream& out, const std::vector<TorusRow>& rows) {
    out << "n,probability,exact,sqrt_n_scaled\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.probability) << ',';
        if (r.exact != 0) out << rational_to_string(r.exact);
        out << ',' << format_double(r.sqrt_n_scaled) << "\n";
    }
}

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
    out << "n,trials,nonregular,fraction\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.trials << ',' << r.nonregular << ',' << format_double(r.fraction)
            << "\n";
    }
}

} // namespace weylwalk
