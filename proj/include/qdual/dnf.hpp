#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"

namespace qdual {

// One implicant: 1-based variable indices, strictly ascending.
using Implicant = std::vector<int>;

inline int hamming_weight(std::uint64_t x) { return std::popcount(x); }

// Bitwise complement of x on n bits: 2^n - x - 1.
inline std::uint64_t complement_index(std::uint64_t x, int n) {
    if (n < 1 || n > 62) throw DomainError("complement_index: arity must be in [1, 62]");
    const std::uint64_t size = std::uint64_t{1} << n;
    if (x >= size) throw DomainError("complement_index: input out of range");
    return size - x - 1;
}

namespace detail {

inline std::uint64_t implicant_mask(const Implicant& imp) {
    std::uint64_t m = 0;
    for (int i : imp) m |= std::uint64_t{1} << (i - 1);
    return m;
}

} // namespace detail

// True iff no implicant is contained in another and there are no duplicates.
// Works on raw lists; indices are assumed structurally valid.
inline bool is_prime_antichain(const std::vector<Implicant>& implicants) {
    const std::size_t k = implicants.size();
    std::vector<std::uint64_t> masks(k);
    for (std::size_t i = 0; i < k; ++i) masks[i] = detail::implicant_mask(implicants[i]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && (masks[i] & masks[j]) == masks[i]) return false;
    return true;
}

// Drops every implicant that contains another one (duplicates collapse to a
// single copy). The surviving minimal sets form an antichain.
inline std::vector<Implicant> remove_superset_implicants(std::vector<Implicant> implicants) {
    std::sort(implicants.begin(), implicants.end());
    implicants.erase(std::unique(implicants.begin(), implicants.end()), implicants.end());
    const std::size_t k = implicants.size();
    std::vector<std::uint64_t> masks(k);
    for (std::size_t i = 0; i < k; ++i) masks[i] = detail::implicant_mask(implicants[i]);
    std::vector<Implicant> kept;
    for (std::size_t i = 0; i < k; ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < k && minimal; ++j)
            if (i != j && (masks[j] & masks[i]) == masks[j]) minimal = false;
        if (minimal) kept.push_back(implicants[i]);
    }
    return kept;
}

// Prime monotone boolean function over variables 1..n represented as an
// antichain of implicants. Implicants are kept lexicographically sorted, and
// each is mirrored as an n-bit mask for O(1) cover/intersection tests.
// Variable i reads bit (i-1) of the input index (LSB first). The empty
// implicant list is the constant-0 function. Values are immutable after
// construction and safe to share across threads.
class MonotoneDNF {
public:
    MonotoneDNF(int num_vars, std::vector<Implicant> implicants)
        : num_vars_(num_vars), implicants_(std::move(implicants)) {
        if (num_vars_ < 1 || num_vars_ > 62)
            throw DomainError("MonotoneDNF: number of variables must be in [1, 62]");
        for (const Implicant& imp : implicants_) {
            if (imp.empty()) throw DomainError("MonotoneDNF: empty implicant");
            for (std::size_t i = 0; i < imp.size(); ++i) {
                if (imp[i] < 1 || imp[i] > num_vars_)
                    throw IndexOutOfRange("MonotoneDNF: variable index " + std::to_string(imp[i]) +
                                          " outside [1, " + std::to_string(num_vars_) + "]");
                if (i > 0 && imp[i] <= imp[i - 1])
                    throw DomainError("MonotoneDNF: implicant indices must be strictly ascending");
            }
        }
        std::sort(implicants_.begin(), implicants_.end());
        if (!is_prime_antichain(implicants_))
            throw NotAntichain("MonotoneDNF: implicants are not an antichain");
        masks_.reserve(implicants_.size());
        for (const Implicant& imp : implicants_) masks_.push_back(detail::implicant_mask(imp));
    }

    int num_vars() const { return num_vars_; }
    std::uint64_t num_inputs() const { return std::uint64_t{1} << num_vars_; }
    const std::vector<Implicant>& implicants() const { return implicants_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    bool is_constant_zero() const { return implicants_.empty(); }

    // 1 iff some implicant is fully covered by the set bits of x.
    int evaluate(std::uint64_t x) const {
        if (x >= num_inputs()) throw DomainError("evaluate: input out of range");
        for (std::uint64_t m : masks_)
            if ((x & m) == m) return 1;
        return 0;
    }

    friend bool operator==(const MonotoneDNF& a, const MonotoneDNF& b) {
        return a.num_vars_ == b.num_vars_ && a.implicants_ == b.implicants_;
    }

private:
    int num_vars_;
    std::vector<Implicant> implicants_;
    std::vector<std::uint64_t> masks_;
};

inline bool is_prime_antichain(const MonotoneDNF& f) { return is_prime_antichain(f.implicants()); }

// ---------------------------------------------------------------------------
// .dnf format: '#' comment lines, then a `vars: <n>` header, then one
// implicant per line as ascending space-separated 1-based indices.
// ---------------------------------------------------------------------------

struct ParseOptions {
    bool minimize = false; // strip superset implicants instead of rejecting them
};

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

inline int parse_header(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    long long n = 0;
    if (!(in >> tag) || tag != "vars:" || !(in >> n))
        throw SyntaxError(".dnf header must be `vars: <n>`, got: " + line);
    std::string rest;
    if (in >> rest) throw SyntaxError(".dnf header has trailing tokens: " + line);
    if (n < 1) throw SyntaxError(".dnf header needs a positive variable count");
    if (n > 62) throw SyntaxError(".dnf header exceeds the 62-variable representation limit");
    return static_cast<int>(n);
}

inline Implicant parse_implicant_line(const std::string& line, int num_vars) {
    std::istringstream in(line);
    Implicant imp;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw SyntaxError("malformed implicant token `" + tok + "` in line: " + line);
        }
        if (used != tok.size())
            throw SyntaxError("malformed implicant token `" + tok + "` in line: " + line);
        if (v < 1 || v > num_vars)
            throw IndexOutOfRange("variable index " + std::to_string(v) + " outside [1, " +
                                  std::to_string(num_vars) + "] in line: " + line);
        if (!imp.empty() && v <= imp.back())
            throw SyntaxError("implicant indices must be strictly ascending in line: " + line);
        imp.push_back(static_cast<int>(v));
    }
    return imp;
}

} // namespace detail

inline MonotoneDNF parse_dnf(std::istream& in, const ParseOptions& opts = {}) {
    std::string line;
    std::optional<int> num_vars;
    std::vector<Implicant> implicants;
    while (std::getline(in, line)) {
        if (detail::is_blank_or_comment(line)) continue;
        if (!num_vars) {
            num_vars = detail::parse_header(line);
            continue;
        }
        implicants.push_back(detail::parse_implicant_line(line, *num_vars));
    }
    if (!num_vars) throw SyntaxError(".dnf input is missing the `vars: <n>` header");
    if (opts.minimize) implicants = remove_superset_implicants(std::move(implicants));
    return MonotoneDNF(*num_vars, std::move(implicants));
}

inline MonotoneDNF parse_dnf(const std::string& text, const ParseOptions& opts = {}) {
    std::istringstream in(text);
    return parse_dnf(in, opts);
}

// Canonical form: header plus implicants in lexicographic order. Parsing the
// output reproduces the value bit-exactly.
inline std::string serialize_dnf(const MonotoneDNF& f) {
    std::ostringstream out;
    out << "vars: " << f.num_vars() << '\n';
    for (const Implicant& imp : f.implicants()) {
        for (std::size_t i = 0; i < imp.size(); ++i) {
            if (i > 0) out << ' ';
            out << imp[i];
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Derived oracles and transformations
// ---------------------------------------------------------------------------

inline BooleanOracle dnf_oracle(const MonotoneDNF& f) {
    return BooleanOracle(f.num_vars(), [f](std::uint64_t x) { return f.evaluate(x); });
}

struct IntersectionWitness {
    Implicant from_f;
    Implicant from_g;
    // Characteristic vector of from_f; certifies f(x) = 1 = g(~x), so the
    // pair cannot be mutually dual.
    std::uint64_t certificate = 0;
};

// Searches for implicants I of f and J of g with I disjoint from J. Empty
// result means the necessary duality condition holds: every implicant of f
// meets every implicant of g.
inline std::optional<IntersectionWitness> find_disjoint_pair(const MonotoneDNF& f,
                                                             const MonotoneDNF& g) {
    if (f.num_vars() != g.num_vars())
        throw ArityMismatch("find_disjoint_pair: arity " + std::to_string(f.num_vars()) +
                            " vs " + std::to_string(g.num_vars()));
    for (std::size_t i = 0; i < f.implicants().size(); ++i)
        for (std::size_t j = 0; j < g.implicants().size(); ++j)
            if ((f.masks()[i] & g.masks()[j]) == 0)
                return IntersectionWitness{f.implicants()[i], g.implicants()[j], f.masks()[i]};
    return std::nullopt;
}

inline bool intersection_condition(const MonotoneDNF& f, const MonotoneDNF& g) {
    return !find_disjoint_pair(f, g).has_value();
}

// h(x) = f(x) XOR ~g(~x). Identically zero exactly when f and g are mutually
// dual; its ones are the duality violations.
inline BooleanOracle build_h_oracle(const MonotoneDNF& f, const MonotoneDNF& g) {
    if (f.num_vars() != g.num_vars())
        throw ArityMismatch("build_h_oracle: arity " + std::to_string(f.num_vars()) + " vs " +
                            std::to_string(g.num_vars()));
    const int n = f.num_vars();
    return BooleanOracle(n, [f, g, n](std::uint64_t x) {
        return f.evaluate(x) ^ (1 - g.evaluate(complement_index(x, n)));
    });
}

// Marks x with f(x) = f(~x); h built against f itself has exactly that
// support, so this is the search predicate for self-duality witnesses.
inline BooleanOracle self_dual_violation_oracle(const MonotoneDNF& f) {
    return build_h_oracle(f, f);
}

// Joint function y f OR z g OR y z on n+2 variables (y = n+1, z = n+2);
// self-dual exactly when f and g are mutually dual. Stays an antichain for
// antichain inputs.
inline MonotoneDNF self_dual_reduction(const MonotoneDNF& f, const MonotoneDNF& g) {
    if (f.num_vars() != g.num_vars())
        throw ArityMismatch("self_dual_reduction: arity " + std::to_string(f.num_vars()) +
                            " vs " + std::to_string(g.num_vars()));
    const int n = f.num_vars();
    const int y = n + 1;
    const int z = n + 2;
    std::vector<Implicant> implicants;
    implicants.reserve(f.implicants().size() + g.implicants().size() + 1);
    for (Implicant imp : f.implicants()) {
        imp.push_back(y);
        implicants.push_back(std::move(imp));
    }
    for (Implicant imp : g.implicants()) {
        imp.push_back(z);
        implicants.push_back(std::move(imp));
    }
    implicants.push_back({y, z});
    return MonotoneDNF(n + 2, std::move(implicants));
}

// Majority-threshold function: every ceil(n/2)-subset of {1..n} is an
// implicant, so there are C(n, ceil(n/2)) of them and f(x) = [w(x) >= ceil(n/2)].
// Self-dual for every odd n >= 1.
inline MonotoneDNF generate_majority(int n) {
    if (n < 1) throw DomainError("generate_majority: n must be positive");
    if (n % 2 == 0) throw EvenArity("generate_majority: n must be odd, got " + std::to_string(n));
    const int k = (n + 1) / 2;
    std::vector<Implicant> implicants;
    Implicant cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        implicants.push_back(cur);
        // next k-combination of {1..n} in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    return MonotoneDNF(n, std::move(implicants));
}

} // namespace qdual
