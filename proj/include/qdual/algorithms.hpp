#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"
#include "qdual/rng.hpp"
#include "qdual/statevector.hpp"

namespace qdual {

struct SimConfig {
    std::uint64_t seed = 0;
    double grover_growth = 1.2;    // growth factor of the unknown-count schedule
    int grover_restarts = 20;      // measurement rounds before giving up
    int dj_repetitions = 1;
    bool strict_counting = false;  // accept only the principal counting branch
    std::optional<int> t_override; // counting register width, if forced
    int qubit_cap = kDefaultQubitCap;

    void validate() const {
        if (grover_growth <= 1.0) throw DomainError("SimConfig: growth factor must exceed 1");
        if (grover_restarts < 1) throw DomainError("SimConfig: restart budget must be >= 1");
        if (dj_repetitions < 1) throw DomainError("SimConfig: repetition count must be >= 1");
    }
};

struct DeutschJozsaResult {
    std::uint64_t z = 0;                 // measured input-register value
    std::uint64_t oracle_applications = 1;
};

// One-shot Deutsch-Jozsa on an n-bit oracle with a single ancilla. Measures z
// with Pr[z] = |2^-n sum_x (-1)^(x.z + h(x))|^2, so z = 0 is certain for a
// constant oracle and impossible for a balanced one. Exactly one oracle
// application.
inline DeutschJozsaResult deutsch_jozsa(const BooleanOracle& oracle, Rng& rng,
                                        int qubit_cap = kDefaultQubitCap) {
    const int n = oracle.arity();
    if (n + 1 > qubit_cap)
        throw TooManyQubits("deutsch_jozsa: needs " + std::to_string(n + 1) + " qubits, cap " +
                            std::to_string(qubit_cap));
    const auto inputs = make_register(0, n);
    // |0...0>|1>, then Hadamard everywhere puts the ancilla in |->
    StateVector s = StateVector::basis(n + 1, std::uint64_t{1} << n, qubit_cap);
    apply_hadamard_layer(s, make_register(0, n + 1));
    apply_xor_oracle(s, oracle, inputs, n);
    apply_hadamard_layer(s, inputs);
    DeutschJozsaResult result;
    result.z = measure_register(s, inputs, rng);
    result.oracle_applications = 1;
    return result;
}

struct GroverResult {
    std::optional<std::uint64_t> solution;  // classically verified marked input
    std::uint64_t oracle_applications = 0;  // phase-oracle uses across all rounds
    std::uint64_t verification_queries = 0; // classical confirmations, one per round
    int rounds = 0;
};

// Grover search without knowing the number of marked inputs: per round the
// iteration count j is drawn uniformly from [0, ceil(m)), the state is
// measured and the candidate verified classically; m grows geometrically up
// to ceil(sqrt(2^n)). Never returns an unverified candidate; empty after the
// restart budget is spent.
inline GroverResult grover_search_unknown(const BooleanOracle& predicate, const SimConfig& config,
                                          Rng& rng) {
    config.validate();
    const int n = predicate.arity();
    if (n > config.qubit_cap)
        throw TooManyQubits("grover_search_unknown: needs " + std::to_string(n) + " qubits, cap " +
                            std::to_string(config.qubit_cap));
    const auto inputs = make_register(0, n);
    const double cap = std::ceil(std::sqrt(std::ldexp(1.0, n)));
    double m = 1.0;
    GroverResult result;
    for (int round = 0; round < config.grover_restarts; ++round) {
        ++result.rounds;
        const auto bound = static_cast<std::uint64_t>(std::ceil(m));
        const std::uint64_t j = rng.next_below(bound);
        StateVector s = init_uniform(n, config.qubit_cap);
        for (std::uint64_t i = 0; i < j; ++i) {
            apply_phase_oracle(s, predicate, inputs);
            apply_diffusion(s, inputs);
        }
        result.oracle_applications += j;
        const std::uint64_t candidate = measure_register(s, inputs, rng);
        ++result.verification_queries;
        if (predicate(candidate)) {
            result.solution = candidate;
            return result;
        }
        m = std::min(m * config.grover_growth, cap);
    }
    return result;
}

struct CountingEstimate {
    std::uint64_t y = 0;                   // measured phase integer in [0, 2^t)
    int t = 0;                             // counting register width
    double estimated_solutions = 0.0;                    // 2^n sin^2(pi y / 2^t)
    std::uint64_t grover_applications = 0; // controlled iterate uses, 2^t - 1
};

// Phase estimation of the Grover iterate (phase oracle then diffusion) with a
// t-qubit counting register; controlled powers G^(2^j) run as 2^j sequential
// controlled applications, 2^t - 1 in total. When sin^2(theta/2) = M/2^n has
// an exactly dyadic phase the measurement is exact and lands on one of the
// two conjugate eigenphase encodings of M.
inline CountingEstimate quantum_counting(const BooleanOracle& predicate, int t, Rng& rng,
                                         int qubit_cap = kDefaultQubitCap) {
    if (t < 2) throw WidthTooSmall("quantum_counting: register width must be >= 2, got " +
                                   std::to_string(t));
    const int n = predicate.arity();
    if (n + t > qubit_cap)
        throw TooManyQubits("quantum_counting: needs " + std::to_string(n + t) + " qubits, cap " +
                            std::to_string(qubit_cap));
    const auto inputs = make_register(0, n);
    const auto counting = make_register(n, t);
    StateVector s = init_uniform(n + t, qubit_cap);
    CountingEstimate est;
    est.t = t;
    for (int j = 0; j < t; ++j) {
        const int control = n + j;
        const std::uint64_t reps = std::uint64_t{1} << j;
        for (std::uint64_t r = 0; r < reps; ++r) {
            apply_phase_oracle_controlled(s, predicate, inputs, control);
            apply_diffusion_controlled(s, inputs, control);
            ++est.grover_applications;
        }
    }
    apply_inverse_qft(s, counting);
    est.y = measure_register(s, counting, rng);
    const double phase = std::numbers::pi * static_cast<double>(est.y) / std::ldexp(1.0, t);
    est.estimated_solutions = std::ldexp(1.0, n) * std::sin(phase) * std::sin(phase);
    return est;
}

} // namespace qdual
