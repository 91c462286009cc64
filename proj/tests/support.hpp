#pragma once

// Test-side oracles, kept independent of the library paths they check:
// raw truth-table enumeration, minimal-true-point extraction, and the
// analytic Deutsch-Jozsa output distribution.

#include <cmath>
#include <cstdint>
#include <vector>

#include "qdual/dnf.hpp"
#include "qdual/oracle.hpp"
#include "qdual/rng.hpp"

namespace support {

using Table = std::vector<std::uint8_t>; // 2^n bits indexed by x

inline std::uint64_t comp(std::uint64_t x, int n) { return ((std::uint64_t{1} << n) - 1) ^ x; }

inline bool table_is_monotone(const Table& bits, int n) {
    for (std::uint64_t x = 0; x < bits.size(); ++x)
        for (int b = 0; b < n; ++b)
            if (!((x >> b) & 1) && bits[x] > bits[x | (std::uint64_t{1} << b)]) return false;
    return true;
}

inline bool table_is_self_dual(const Table& bits, int n) {
    for (std::uint64_t x = 0; x < bits.size(); ++x)
        if (bits[x] == bits[comp(x, n)]) return false;
    return true;
}

inline bool tables_are_dual_pair(const Table& f, const Table& g, int n) {
    for (std::uint64_t x = 0; x < f.size(); ++x)
        if (f[x] != 1 - g[comp(x, n)]) return false;
    return true;
}

inline Table dnf_table(const qdual::MonotoneDNF& f) {
    Table bits(f.num_inputs());
    for (std::uint64_t x = 0; x < bits.size(); ++x)
        bits[x] = static_cast<std::uint8_t>(f.evaluate(x));
    return bits;
}

// Prime DNF of a monotone table: the minimal true points are exactly the
// prime implicants.
inline qdual::MonotoneDNF prime_dnf_from_table(int n, const Table& bits) {
    std::vector<qdual::Implicant> implicants;
    for (std::uint64_t x = 0; x < bits.size(); ++x) {
        if (!bits[x]) continue;
        bool minimal = true;
        for (int b = 0; b < n && minimal; ++b)
            if ((x >> b) & 1 && bits[x ^ (std::uint64_t{1} << b)]) minimal = false;
        if (!minimal) continue;
        qdual::Implicant imp;
        for (int b = 0; b < n; ++b)
            if ((x >> b) & 1) imp.push_back(b + 1);
        implicants.push_back(std::move(imp));
    }
    return qdual::MonotoneDNF(n, std::move(implicants));
}

// All self-dual monotone functions on n variables, via the complement-pair
// representation: choose f on [0, 2^(n-1)), mirror with f(~x) = 1 - f(x),
// keep the monotone ones. Counts for n = 1..5: 1, 2, 4, 12, 81.
inline std::vector<Table> enumerate_self_dual_tables(int n) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::vector<Table> out;
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << half); ++assignment) {
        Table bits(std::uint64_t{1} << n);
        for (std::uint64_t x = 0; x < half; ++x) {
            const auto v = static_cast<std::uint8_t>((assignment >> x) & 1);
            bits[x] = v;
            bits[comp(x, n)] = static_cast<std::uint8_t>(1 - v);
        }
        if (table_is_monotone(bits, n)) out.push_back(std::move(bits));
    }
    return out;
}

// All antichains of nonempty subsets of {1..n}, as validated values; the
// empty antichain (constant 0) is included. Counts for n = 1..4: 2, 5, 19, 167.
inline std::vector<qdual::MonotoneDNF> enumerate_antichain_dnfs(int n) {
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) subsets.push_back(m);
    std::vector<qdual::MonotoneDNF> out;
    std::vector<std::uint64_t> chosen;
    auto emit = [&]() {
        std::vector<qdual::Implicant> implicants;
        for (std::uint64_t m : chosen) {
            qdual::Implicant imp;
            for (int b = 0; b < n; ++b)
                if ((m >> b) & 1) imp.push_back(b + 1);
            implicants.push_back(std::move(imp));
        }
        out.emplace_back(n, std::move(implicants));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == subsets.size()) {
            emit();
            return;
        }
        self(self, i + 1);
        for (std::uint64_t m : chosen) {
            const std::uint64_t meet = m & subsets[i];
            if (meet == m || meet == subsets[i]) return; // comparable, prune
        }
        chosen.push_back(subsets[i]);
        self(self, i + 1);
        chosen.pop_back();
    };
    rec(rec, 0);
    return out;
}

// Pr[z] = |2^-n sum_x (-1)^(x.z + h(x))|^2, straight from the definition.
inline std::vector<double> analytic_dj_distribution(const Table& h, int n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<double> probs(size);
    for (std::uint64_t z = 0; z < size; ++z) {
        long long acc = 0;
        for (std::uint64_t x = 0; x < size; ++x) {
            const int sign = (qdual::hamming_weight(x & z) + h[x]) & 1;
            acc += sign ? -1 : 1;
        }
        const double amp = static_cast<double>(acc) / static_cast<double>(size);
        probs[z] = amp * amp;
    }
    return probs;
}

inline double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
    return acc / 2.0;
}

inline Table random_table(int n, qdual::Rng& rng) {
    Table bits(std::uint64_t{1} << n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_below(2));
    return bits;
}

inline qdual::BooleanOracle table_oracle(int n, Table bits) {
    return qdual::BooleanOracle(n, [bits = std::move(bits)](std::uint64_t x) { return bits[x]; });
}

} // namespace support
