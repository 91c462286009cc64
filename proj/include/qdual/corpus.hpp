#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdual/brute.hpp"
#include "qdual/dnf.hpp"
#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"
#include "qdual/rng.hpp"

namespace qdual {

// Parameters of the random antichain generator; recorded alongside benchmark
// output so corpora are reproducible.
struct CorpusParams {
    int num_vars = 4;
    int implicant_attempts = 0; // sampled implicants before stripping; 0 -> num_vars
    int min_size = 1;
    int max_size = 0;           // 0 -> num_vars

    int attempts() const { return implicant_attempts > 0 ? implicant_attempts : num_vars; }
    int size_hi() const { return max_size > 0 ? max_size : num_vars; }

    std::string describe() const {
        return "num_vars=" + std::to_string(num_vars) + " implicant_attempts=" +
               std::to_string(attempts()) + " min_size=" + std::to_string(min_size) +
               " max_size=" + std::to_string(size_hi());
    }
};

namespace detail {

inline Implicant random_subset(int num_vars, int size, Rng& rng) {
    // partial Fisher-Yates over 1..num_vars
    std::vector<int> pool(num_vars);
    for (int i = 0; i < num_vars; ++i) pool[i] = i + 1;
    Implicant imp(size);
    for (int i = 0; i < size; ++i) {
        const auto pick = i + static_cast<int>(rng.next_below(num_vars - i));
        std::swap(pool[i], pool[pick]);
        imp[i] = pool[i];
    }
    std::sort(imp.begin(), imp.end());
    return imp;
}

} // namespace detail

// Random prime monotone DNF: sample k implicants of random sizes, strip
// supersets to an antichain. At least one sampled implicant survives the
// stripping, so the result is never constant.
inline MonotoneDNF random_antichain(const CorpusParams& params, Rng& rng) {
    if (params.num_vars < 1) throw DomainError("random_antichain: num_vars must be positive");
    if (params.min_size < 1 || params.min_size > params.size_hi() ||
        params.size_hi() > params.num_vars)
        throw DomainError("random_antichain: bad implicant size range");
    std::vector<Implicant> implicants;
    const int span = params.size_hi() - params.min_size + 1;
    for (int i = 0; i < params.attempts(); ++i) {
        const int size = params.min_size + static_cast<int>(rng.next_below(span));
        implicants.push_back(detail::random_subset(params.num_vars, size, rng));
    }
    return MonotoneDNF(params.num_vars, remove_superset_implicants(std::move(implicants)));
}

// Resamples until the instance fails brute-force self-duality (random
// antichains almost never are self-dual, so this rarely loops).
inline MonotoneDNF random_non_self_dual(const CorpusParams& params, Rng& rng,
                                        int cap = kDefaultClassicalCap) {
    while (true) {
        MonotoneDNF f = random_antichain(params, rng);
        if (!is_self_dual_brute(f, cap).answer) return f;
    }
}

// Marks exactly the complement pair {x*, ~x*}: the violation set of an
// almost-self-dual function with a single planted defect. The benchmark
// instance for Grover query scaling.
inline BooleanOracle planted_violation_oracle(int n, std::uint64_t x_star) {
    const std::uint64_t size = std::uint64_t{1} << n;
    if (x_star >= size) throw DomainError("planted_violation_oracle: x* out of range");
    const std::uint64_t mirror = complement_index(x_star, n);
    return BooleanOracle(n, [x_star, mirror](std::uint64_t x) {
        return (x == x_star || x == mirror) ? 1 : 0;
    });
}

} // namespace qdual
