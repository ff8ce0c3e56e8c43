#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencase/avgcase.hpp"
#include "gencase/bigint.hpp"
#include "gencase/convergence.hpp"
#include "gencase/frequency.hpp"
#include "gencase/pcp.hpp"
#include "gencase/threesat.hpp"
#include "gencase/turing.hpp"

namespace gencase {

using Json = nlohmann::ordered_json;

// Doubles print with round-trip precision; non-finite values become strings
// (JSON has no literal for them).
inline Json json_double(double d) {
    if (std::isfinite(d)) return d;
    if (std::isnan(d)) return "nan";
    return d > 0 ? "inf" : "-inf";
}

inline std::string fmt_double(double d) {
    if (std::isnan(d)) return "nan";
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

inline Json rational_json(const BigRational& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()},
                {"decimal", json_double(to_double(r))}};
}

inline Json point_json(const FrequencyPoint& pt) {
    Json j;
    j["n"] = pt.n;
    j["mode"] = to_string(pt.mode);
    j["hits"] = pt.hits.str();
    j["trials"] = pt.trials.str();
    j["estimate"] = rational_json(pt.estimate);
    j["ci_half_width"] = json_double(pt.ci_half_width);
    j["confidence"] = json_double(pt.confidence);
    return j;
}

inline Json series_json(const FrequencySeries& s) {
    Json j;
    j["geometry"] = to_string(s.geometry);
    j["predicate"] = s.predicate_id;
    j["points"] = Json::array();
    for (const auto& pt : s.points) j["points"].push_back(point_json(pt));
    return j;
}

/// CSV mirror of a frequency series:
/// n,geometry,mode,hits,trials,estimate,ci_half_width
inline std::string series_csv(const FrequencySeries& s) {
    std::string out = "n,geometry,mode,hits,trials,estimate,ci_half_width\n";
    for (const auto& pt : s.points) {
        out += std::to_string(pt.n);
        out += ',';
        out += to_string(s.geometry);
        out += ',';
        out += to_string(pt.mode);
        out += ',';
        out += pt.hits.str();
        out += ',';
        out += pt.trials.str();
        out += ',';
        out += fmt_double(to_double(pt.estimate));
        out += ',';
        out += fmt_double(pt.ci_half_width);
        out += '\n';
    }
    return out;
}

inline Json linear_fit_json(const LinearFit& f) {
    return Json{{"slope", json_double(f.slope)},
                {"intercept", json_double(f.intercept)},
                {"rss", json_double(f.rss)},
                {"points", f.points}};
}

inline Json convergence_json(const ConvergenceReport& r) {
    Json j;
    j["target"] = json_double(r.target);
    j["residuals"] = Json::array();
    for (double v : r.residuals) j["residuals"].push_back(json_double(v));
    j["classification"] = to_string(r.classification);
    j["power_fit"] = linear_fit_json(r.power_fit);
    j["exponential_fit"] = linear_fit_json(r.exponential_fit);
    j["horizon"] = r.horizon;
    j["tolerances"] = Json{{"decrease_slope_eps", r.tolerances.decrease_slope_eps},
                           {"incompatible_exponent", r.tolerances.incompatible_exponent},
                           {"superpolynomial_exponent", r.tolerances.superpolynomial_exponent}};
    j["notes"] = r.notes;
    return j;
}

inline Json avg_json(const AvgReport& r) {
    Json j;
    j["criterion"] = to_string(r.criterion);
    j["function"] = r.function_label;
    j["epsilon"] = rational_json(r.epsilon);
    j["horizon"] = r.horizon;
    j["verdict"] = to_string(r.verdict);
    j["tolerances"] = Json{{"ratio_threshold", r.tolerances.ratio_threshold},
                           {"divergence_bound_log2", r.tolerances.divergence_bound_log2},
                           {"bounded_slack", r.tolerances.bounded_slack},
                           {"tail_window_min", r.tolerances.tail_window_min}};
    j["terms"] = Json::array();
    for (const auto& t : r.terms) {
        Json tj;
        tj["n"] = t.n;
        tj["log2_term"] = json_double(t.log2_term);
        tj["log2_running"] = json_double(t.log2_running);
        tj["exact"] = t.exact_term ? rational_json(*t.exact_term) : Json(nullptr);
        j["terms"].push_back(std::move(tj));
    }
    j["notes"] = r.notes;
    return j;
}

inline Json markov_json(const MarkovReport& r) {
    Json j;
    j["c"] = rational_json(r.c);
    j["k"] = r.k;
    j["q"] = r.q.label();
    j["bounds"] = Json::array();
    for (const auto& [n, b] : r.bound_values)
        j["bounds"].push_back(Json{{"n", n}, {"bound", rational_json(b)}});
    j["violation_masses"] = series_json(r.violation_masses);
    j["notes"] = r.notes;
    return j;
}

inline Json separation_json(const SeparationReport& r) {
    Json j;
    j["primal_levin"] = avg_json(r.primal_levin);
    j["primal_generic"] = Json::array();
    for (const auto& sep : r.primal_generic) {
        Json sj;
        sj["polynomial"] = sep.poly.label();
        sj["crossover"] = sep.crossover;
        sj["below_bound"] = series_json(sep.below_bound);
        sj["fails_past_crossover"] = sep.fails_past_crossover;
        j["primal_generic"].push_back(std::move(sj));
    }
    j["dual_generic_min"] = series_json(r.dual_generic_min);
    j["dual_generic_max"] = series_json(r.dual_generic_max);
    j["dual_levin"] = avg_json(r.dual_levin);
    j["primal_average_converges"] = r.primal_average_converges;
    j["primal_generic_fails"] = r.primal_generic_fails;
    j["dual_generic_passes"] = r.dual_generic_passes;
    j["dual_average_diverges"] = r.dual_average_diverges;
    j["incomparability_instantiated"] = r.incomparability_instantiated;
    j["horizon"] = r.horizon;
    j["notes"] = r.notes;
    return j;
}

inline Json tm_program_json(const TmProgram& p) {
    Json j;
    j["n"] = p.state_count();
    j["table"] = Json::array();
    for (std::uint32_t state = 1; state <= p.state_count(); ++state)
        for (std::uint8_t sym = 0; sym < 2; ++sym) {
            const TmInstruction ins = p.instruction(state, sym);
            j["table"].push_back(Json{{"state", state},
                                      {"read", sym == 0 ? "a0" : "a1"},
                                      {"next", ins.next_state},
                                      {"write", ins.write == 0 ? "a0" : "a1"},
                                      {"dir", ins.dir == Dir::left ? "L" : "R"}});
        }
    return j;
}

inline Json pcp_instance_json(const PcpInstance& inst) {
    Json j;
    j["k"] = inst.k;
    j["pairs"] = Json::array();
    for (const auto& [u, v] : inst.pairs) j["pairs"].push_back(Json::array({u, v}));
    return j;
}

inline Json cnf3_json(const Cnf3Instance& inst) {
    Json j;
    j["clauses"] = Json::array();
    for (const auto& clause : inst.clauses) {
        Json cj = Json::array();
        for (const auto& lit : clause.lits)
            cj.push_back(Json{{"var", lit.var}, {"negated", lit.negated}});
        j["clauses"].push_back(std::move(cj));
    }
    j["text"] = render_instance(inst);
    j["size"] = instance_size(inst);
    return j;
}

/// Adjacency export of a counting automaton for outside inspection.
inline Json dfa_json(const CountingDfa& dfa) {
    Json j;
    j["alphabet"] = Json::array();
    for (int a = 0; a < kSymCount; ++a) j["alphabet"].push_back(std::string(1, kSymAscii[a]));
    j["start"] = dfa.start;
    j["accepting"] = Json::array();
    for (std::size_t s = 0; s < dfa.state_count(); ++s)
        if (dfa.accepting[s]) j["accepting"].push_back(s);
    j["delta"] = Json::array();
    for (const auto& row : dfa.delta) {
        Json rj = Json::array();
        for (int a = 0; a < kSymCount; ++a) rj.push_back(row[a]);
        j["delta"].push_back(std::move(rj));
    }
    return j;
}

}  // namespace gencase
