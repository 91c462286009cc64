#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qdual/algorithms.hpp"
#include "qdual/brute.hpp"
#include "qdual/dnf.hpp"
#include "qdual/errors.hpp"
#include "qdual/verdict.hpp"

namespace qdual {

struct StepRecord {
    int step = 0;
    std::string name;
    std::optional<std::uint64_t> measured;
    std::optional<double> estimate; // counting step: the solution-count estimate
    std::uint64_t queries = 0;
    std::string decision; // "continue" | "reject" | "accept"
};

struct QueryTotals {
    std::uint64_t dj = 0;        // oracle applications inside Deutsch-Jozsa runs
    std::uint64_t counting = 0;  // controlled Grover-iterate applications
    std::uint64_t grover = 0;    // Grover phase-oracle applications
    std::uint64_t classical = 0; // classical verification evaluations

    std::uint64_t total() const { return dj + counting + grover + classical; }
};

// Full per-step record of one pipeline run.
struct VerdictTrace {
    std::vector<StepRecord> steps;
    Verdict final;
    QueryTotals queries;
    SimConfig config;
    int t_used = 0;
    int num_vars = 0;

    std::uint64_t step_query_total() const {
        std::uint64_t total = 0;
        for (const StepRecord& s : steps) total += s.queries;
        return total;
    }
};

// Counting register width: ceil(n/2) per the algorithm, floored at 2 so the
// accepted outcome 2^(t-2) exists.
inline int counting_width_for(int n, const SimConfig& config) {
    const int t = config.t_override ? *config.t_override : (n + 1) / 2;
    if (t < 2 && config.t_override)
        throw WidthTooSmall("counting width override must be >= 2");
    return t < 2 ? 2 : t;
}

namespace detail {

inline void check_pipeline_input(const MonotoneDNF& f, int t, const SimConfig& config) {
    if (f.is_constant_zero())
        throw ConstantFunction("pipeline input is the constant-0 function");
    if (f.num_vars() < 2)
        throw DomainError("pipeline needs at least 2 variables, got " +
                          std::to_string(f.num_vars()));
    if (f.num_vars() + t > config.qubit_cap)
        throw ArityTooLarge("pipeline on " + std::to_string(f.num_vars()) + " variables needs " +
                            std::to_string(f.num_vars() + t) + " qubits, cap " +
                            std::to_string(config.qubit_cap));
}

inline StepRecord reject(int step, std::string name, std::optional<std::uint64_t> measured,
                         std::uint64_t queries) {
    return {step, std::move(name), measured, std::nullopt, queries, "reject"};
}

} // namespace detail

// Five-step self-duality decision:
//   1. Deutsch-Jozsa balance probe on f itself; measuring 0 proves imbalance.
//   2. Deutsch-Jozsa constancy probe on h(x) = f(x) xor ~f(~x); nonzero
//      outcome proves h is not identically zero.
//   3. Quantum counting of f's ones with a t-qubit register; a balanced f
//      lands on 2^(t-2) or its conjugate 3*2^(t-2) (strict mode accepts only
//      the former, reproducing the literal rule).
//   4. Grover search for a violation x with f(x) = f(~x); any verified hit
//      refutes self-duality.
//   5. Accept.
// Rejections are exact; acceptance carries the one-sided risk that step 4
// missed a sparse violation set.
inline VerdictTrace quantum_self_dual(const MonotoneDNF& f, const SimConfig& config) {
    config.validate();
    const int n = f.num_vars();
    const int t = counting_width_for(n, config);
    detail::check_pipeline_input(f, t, config);

    Rng rng(config.seed);
    VerdictTrace trace;
    trace.config = config;
    trace.t_used = t;
    trace.num_vars = n;

    // step 1: balance probe
    {
        auto f_oracle = dnf_oracle(f);
        std::uint64_t z = 0;
        bool rejected = false;
        std::uint64_t queries = 0;
        for (int rep = 0; rep < config.dj_repetitions && !rejected; ++rep) {
            const auto dj = deutsch_jozsa(f_oracle, rng, config.qubit_cap);
            queries += dj.oracle_applications;
            z = dj.z;
            rejected = (z == 0);
        }
        trace.queries.dj += queries;
        if (rejected) {
            trace.steps.push_back(detail::reject(1, "dj_balance", z, queries));
            trace.final = Verdict::no(Reason::NotBalanced);
            return trace;
        }
        trace.steps.push_back({1, "dj_balance", z, std::nullopt, queries, "continue"});
    }

    // step 2: constancy probe on h
    {
        auto h = build_h_oracle(f, f);
        std::uint64_t z = 0;
        bool rejected = false;
        std::uint64_t queries = 0;
        for (int rep = 0; rep < config.dj_repetitions && !rejected; ++rep) {
            const auto dj = deutsch_jozsa(h, rng, config.qubit_cap);
            queries += dj.oracle_applications;
            z = dj.z;
            rejected = (z != 0);
        }
        trace.queries.dj += queries;
        if (rejected) {
            trace.steps.push_back(detail::reject(2, "dj_h_constant", z, queries));
            trace.final = Verdict::no(Reason::HNotConstantZero);
            return trace;
        }
        trace.steps.push_back({2, "dj_h_constant", z, std::nullopt, queries, "continue"});
    }

    // step 3: count the ones of f
    {
        auto counting_oracle = dnf_oracle(f);
        const auto est = quantum_counting(counting_oracle, t, rng, config.qubit_cap);
        trace.queries.counting += est.grover_applications;
        const std::uint64_t principal = std::uint64_t{1} << (t - 2);
        const std::uint64_t conjugate = 3 * principal;
        const bool accepted =
            config.strict_counting ? est.y == principal : (est.y == principal || est.y == conjugate);
        StepRecord rec{3, "quantum_counting", est.y, est.estimated_solutions, est.grover_applications,
                       accepted ? "continue" : "reject"};
        trace.steps.push_back(rec);
        if (!accepted) {
            trace.final = Verdict::no(Reason::CountMismatch);
            return trace;
        }
    }

    // step 4: hunt a violation
    {
        auto violation = self_dual_violation_oracle(f);
        const auto found = grover_search_unknown(violation, config, rng);
        trace.queries.grover += found.oracle_applications;
        trace.queries.classical += found.verification_queries;
        const std::uint64_t queries = found.oracle_applications + found.verification_queries;
        if (found.solution) {
            trace.steps.push_back(detail::reject(4, "grover_witness", *found.solution, queries));
            trace.final = Verdict::no(Reason::WitnessFound, *found.solution);
            return trace;
        }
        trace.steps.push_back({4, "grover_witness", std::nullopt, std::nullopt, queries, "continue"});
    }

    trace.steps.push_back({5, "accept", std::nullopt, std::nullopt, 0, "accept"});
    trace.final = Verdict::yes();
    return trace;
}

enum class DualRoute { Direct, Reduction };

inline std::string_view to_string(DualRoute r) {
    return r == DualRoute::Direct ? "direct" : "reduction";
}

// Dual-pair decision. Step 0 is the classical implicant intersection
// precheck; a disjoint pair refutes duality outright with an integer
// certificate. The direct route then probes h = f xor ~g(~.) with
// Deutsch-Jozsa and hunts an h-witness with Grover; the reduction route runs
// the self-duality pipeline on the joint function over n+2 variables (its
// witness indices live on that larger domain).
inline VerdictTrace quantum_dual_pair(const MonotoneDNF& f, const MonotoneDNF& g,
                                      const SimConfig& config, DualRoute route) {
    config.validate();
    if (f.num_vars() != g.num_vars())
        throw ArityMismatch("quantum_dual_pair: arity " + std::to_string(f.num_vars()) + " vs " +
                            std::to_string(g.num_vars()));
    if (f.is_constant_zero() || g.is_constant_zero())
        throw ConstantFunction("pipeline input is the constant-0 function");
    const int n = f.num_vars();
    if (n < 2) throw DomainError("pipeline needs at least 2 variables, got " + std::to_string(n));

    VerdictTrace trace;
    trace.config = config;
    trace.num_vars = n;
    trace.t_used = 0;

    // step 0: intersection precheck
    if (const auto pair = find_disjoint_pair(f, g)) {
        trace.steps.push_back(detail::reject(0, "intersection_check", pair->certificate, 0));
        trace.final = Verdict::no(Reason::IntersectionViolated, pair->certificate);
        return trace;
    }
    trace.steps.push_back({0, "intersection_check", std::nullopt, std::nullopt, 0, "continue"});

    if (route == DualRoute::Reduction) {
        VerdictTrace inner = quantum_self_dual(self_dual_reduction(f, g), config);
        for (StepRecord& rec : inner.steps) trace.steps.push_back(std::move(rec));
        trace.final = inner.final;
        trace.queries = inner.queries;
        trace.t_used = inner.t_used;
        return trace;
    }

    // the direct route runs no counting register; one ancilla is its peak
    if (n + 1 > config.qubit_cap)
        throw ArityTooLarge("pipeline on " + std::to_string(n) + " variables needs " +
                            std::to_string(n + 1) + " qubits, cap " +
                            std::to_string(config.qubit_cap));
    Rng rng(config.seed);

    // step 1: constancy probe on h
    auto h = build_h_oracle(f, g);
    {
        std::uint64_t z = 0;
        bool rejected = false;
        std::uint64_t queries = 0;
        for (int rep = 0; rep < config.dj_repetitions && !rejected; ++rep) {
            const auto dj = deutsch_jozsa(h, rng, config.qubit_cap);
            queries += dj.oracle_applications;
            z = dj.z;
            rejected = (z != 0);
        }
        trace.queries.dj += queries;
        if (rejected) {
            trace.steps.push_back(detail::reject(1, "dj_h_constant", z, queries));
            trace.final = Verdict::no(Reason::HNotConstantZero);
            return trace;
        }
        trace.steps.push_back({1, "dj_h_constant", z, std::nullopt, queries, "continue"});
    }

    // step 2: hunt an h-witness
    {
        const auto found = grover_search_unknown(h, config, rng);
        trace.queries.grover += found.oracle_applications;
        trace.queries.classical += found.verification_queries;
        const std::uint64_t queries = found.oracle_applications + found.verification_queries;
        if (found.solution) {
            trace.steps.push_back(detail::reject(2, "grover_witness", *found.solution, queries));
            trace.final = Verdict::no(Reason::WitnessFound, *found.solution);
            return trace;
        }
        trace.steps.push_back({2, "grover_witness", std::nullopt, std::nullopt, queries, "continue"});
    }

    trace.steps.push_back({3, "accept", std::nullopt, std::nullopt, 0, "accept"});
    trace.final = Verdict::yes();
    return trace;
}

// Comparison of a pipeline verdict against exhaustive ground truth. A quantum
// True on a classically False input is the documented one-sided error; the
// converse direction is a defect and never permitted.
struct CrossCheckReport {
    bool agree = false;
    bool defect = false;
    std::string classification; // "agreement" | "one_sided_error" | "defect"
    Verdict quantum;
    Verdict classical;
};

inline CrossCheckReport cross_validate(const MonotoneDNF& f, const std::optional<MonotoneDNF>& g,
                                       const VerdictTrace& trace, int cap = kDefaultClassicalCap) {
    CrossCheckReport report;
    report.quantum = trace.final;
    report.classical = g ? is_dual_pair_brute(f, *g, cap) : is_self_dual_brute(f, cap);
    report.agree = report.quantum.answer == report.classical.answer;
    report.defect = !report.quantum.answer && report.classical.answer;
    report.classification =
        report.agree ? "agreement" : (report.defect ? "defect" : "one_sided_error");
    return report;
}

// ---------------------------------------------------------------------------
// JSON serialization of traces (stable schema, byte-identical across
// identical seeded runs)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["answer"] = v.answer;
    j["reason"] = std::string(to_string(v.reason));
    if (v.witness)
        j["witness"] = *v.witness;
    else
        j["witness"] = nullptr;
    return j;
}

inline nlohmann::json to_json(const VerdictTrace& trace) {
    nlohmann::json j;
    j["config"] = {{"seed", trace.config.seed},
                   {"t", trace.t_used},
                   {"lambda", trace.config.grover_growth},
                   {"R", trace.config.grover_restarts},
                   {"strict", trace.config.strict_counting}};
    j["final"] = to_json(trace.final);
    j["queries"] = {{"dj", trace.queries.dj},
                    {"counting", trace.queries.counting},
                    {"grover", trace.queries.grover},
                    {"classical", trace.queries.classical}};
    j["steps"] = nlohmann::json::array();
    for (const StepRecord& rec : trace.steps) {
        nlohmann::json step;
        step["step"] = rec.step;
        step["name"] = rec.name;
        if (rec.measured)
            step["measured"] = *rec.measured;
        else
            step["measured"] = nullptr;
        if (rec.estimate) step["estimate"] = *rec.estimate;
        step["queries"] = rec.queries;
        step["decision"] = rec.decision;
        j["steps"].push_back(std::move(step));
    }
    return j;
}

inline std::string trace_json(const VerdictTrace& trace) { return to_json(trace).dump(2); }

} // namespace qdual
