#pragma once

#include <iosfwd>
#include <string>

#include "weylwalk/census.hpp"
#include "weylwalk/chain.hpp"
#include "weylwalk/harness.hpp"
#include "weylwalk/walker.hpp"
#include "weylwalk/weyl.hpp"

namespace weylwalk {

// Matrix text format: line 1 = dim d, then d lines of d space-separated
// decimal integers.
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const IntMatrix& m);

// Polynomial text format: space-separated coefficients, ascending degree.
IntPoly read_poly(std::istream& in);
std::string poly_to_string(const IntPoly& p);
std::string poly_to_string(const ModPoly& p);

// Exact rationals render as "num/den" ("num" when den = 1).
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& text);

// WeylClass <-> {"type":"A","parts":[...]} / {"type":"C","pos":[...],"neg":[...]}
std::string weyl_class_to_json(const WeylClass& c);
WeylClass weyl_class_from_json(const std::string& text);

// {"p":..., "status":"good|not_squarefree|wrong_char", "class":{...}}
std::string observation_to_json(const FrobeniusObservation& obs);

std::string certificate_to_json(const Certificate& cert);

// Walk config file. Fields: group ("SL(3)"), generators (optional list of
// {"file":..., "label":...}), weights (optional "num/den" strings), length,
// seed, mode ("exact"|"modular"|"dual"), primes (list or
// {"first":K,"min":B}), membership_check_stride, trace_limit.
// Generator file paths resolve relative to the config file.
WalkConfig load_walk_config(const std::string& path);
WalkConfig parse_walk_config(const std::string& json_text, const std::string& base_dir);

// ChainSpec JSON: {"states":[...], "kernel":[["1/2","1/2"],...], "start":0}
ChainSpec load_chain_spec(const std::string& path);
ChainSpec parse_chain_spec(const std::string& json_text);
std::string chain_spec_to_json(const ChainSpec& spec);

std::string census_report_to_json(const CensusReport& report);

// JSONL per trial:
// {"trial":t,"n":n,"verdict":"...","observed":[...],"missing":[...],
//  "primes_used":k} plus "wall_ms" when with_timings is set (timings are
// excluded by default so identical seeds give byte-identical output).
void write_survey_jsonl(std::ostream& out, const SurveyResult& result, bool with_timings);

// CSV summary: n, trials, certified, fraction, wilson_lo, wilson_hi,
// mean_primes.
void write_survey_csv(std::ostream& out, const SurveyResult& result);

// CSV: n, empirical, bound, beta.
void write_deviation_csv(std::ostream& out, const DeviationReport& report);

// CSV: trial, tau, censored.
void write_tau_csv(std::ostream& out, const std::vector<TauSample>& samples);

// CSV: n, probability, exact, sqrt_n_scaled.
void write_torus_csv(std::ostream& out, const std::vector<TorusRow>& rows);

// CSV: n, trials, nonregular, fraction.
void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows);

} // namespace weylwalk
