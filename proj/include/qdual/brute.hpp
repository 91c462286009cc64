#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdual/dnf.hpp"
#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"
#include "qdual/verdict.hpp"

namespace qdual {

// Exhaustive ground truth stays under a second up to this arity.
inline constexpr int kDefaultClassicalCap = 20;

namespace detail {

inline void check_cap(int arity, int cap, const char* op) {
    if (arity > cap)
        throw ArityTooLarge(std::string(op) + ": arity " + std::to_string(arity) +
                            " exceeds classical cap " + std::to_string(cap));
}

} // namespace detail

struct TruthTable {
    int arity = 0;
    std::vector<std::uint8_t> bits; // 2^arity entries, indexed by x
};

// Full evaluation; issues exactly 2^n oracle queries.
inline TruthTable truth_table(const BooleanOracle& f, int cap = kDefaultClassicalCap) {
    detail::check_cap(f.arity(), cap, "truth_table");
    TruthTable t;
    t.arity = f.arity();
    t.bits.resize(f.domain_size());
    for (std::uint64_t x = 0; x < f.domain_size(); ++x) t.bits[x] = static_cast<std::uint8_t>(f(x));
    return t;
}

inline std::uint64_t count_satisfying(const BooleanOracle& f, int cap = kDefaultClassicalCap) {
    detail::check_cap(f.arity(), cap, "count_satisfying");
    std::uint64_t total = 0;
    for (std::uint64_t x = 0; x < f.domain_size(); ++x) total += static_cast<std::uint64_t>(f(x));
    return total;
}

// Takes value 1 on exactly half of the inputs.
inline bool is_balanced(const BooleanOracle& f, int cap = kDefaultClassicalCap) {
    return count_satisfying(f, cap) == f.domain_size() / 2;
}

// f is self-dual iff f(x) != f(~x) everywhere; violations come in complement
// pairs, so scanning the lower half finds the smallest one.
inline std::optional<std::uint64_t> find_self_dual_violation(const BooleanOracle& f,
                                                             int cap = kDefaultClassicalCap) {
    detail::check_cap(f.arity(), cap, "find_self_dual_violation");
    const int n = f.arity();
    for (std::uint64_t x = 0; x < f.domain_size() / 2; ++x)
        if (f(x) == f(complement_index(x, n))) return x;
    return std::nullopt;
}

inline Verdict is_self_dual_brute(const BooleanOracle& f, int cap = kDefaultClassicalCap) {
    const auto witness = find_self_dual_violation(f, cap);
    if (witness) return Verdict::no(Reason::WitnessFound, *witness);
    return Verdict::yes();
}

inline Verdict is_self_dual_brute(const MonotoneDNF& f, int cap = kDefaultClassicalCap) {
    return is_self_dual_brute(dnf_oracle(f), cap);
}

// g dual of f: f(x) = ~g(~x) for all x. The witness is the smallest
// violating x (this relation is not symmetric under x <-> ~x, so the whole
// range is scanned).
inline Verdict is_dual_pair_brute(const BooleanOracle& f, const BooleanOracle& g,
                                  int cap = kDefaultClassicalCap) {
    if (f.arity() != g.arity())
        throw ArityMismatch("is_dual_pair_brute: arity " + std::to_string(f.arity()) + " vs " +
                            std::to_string(g.arity()));
    detail::check_cap(f.arity(), cap, "is_dual_pair_brute");
    const int n = f.arity();
    for (std::uint64_t x = 0; x < f.domain_size(); ++x)
        if (f(x) != 1 - g(complement_index(x, n))) return Verdict::no(Reason::WitnessFound, x);
    return Verdict::yes();
}

inline Verdict is_dual_pair_brute(const MonotoneDNF& f, const MonotoneDNF& g,
                                  int cap = kDefaultClassicalCap) {
    return is_dual_pair_brute(dnf_oracle(f), dnf_oracle(g), cap);
}

// Self-duality via the counting characterization: assuming the pairwise
// implicant intersection condition, f is self-dual iff it is balanced.
inline Verdict classical_self_dual_by_count(const MonotoneDNF& f, int cap = kDefaultClassicalCap) {
    detail::check_cap(f.num_vars(), cap, "classical_self_dual_by_count");
    if (const auto pair = find_disjoint_pair(f, f))
        return Verdict::no(Reason::IntersectionViolated, pair->certificate);
    if (count_satisfying(dnf_oracle(f), cap) != f.num_inputs() / 2)
        return Verdict::no(Reason::CountMismatch);
    return Verdict::yes();
}

} // namespace qdual
