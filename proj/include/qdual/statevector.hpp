#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qdual/errors.hpp"
#include "qdual/oracle.hpp"
#include "qdual/rng.hpp"

namespace qdual {

using Amplitude = std::complex<double>;

// 2^26 amplitudes = 1 GiB of doubles; past that a dense vector stops being a
// desk-scale tool.
inline constexpr int kDefaultQubitCap = 26;

// Dense statevector over q qubits. Qubit k is bit k of the amplitude index
// (LSB first), matching the variable convention of MonotoneDNF. A state is
// owned by one run at a time; operations mutate in place.
class StateVector {
public:
    explicit StateVector(int num_qubits, int qubit_cap = kDefaultQubitCap) : q_(num_qubits) {
        if (q_ < 1 || q_ > qubit_cap)
            throw TooManyQubits("StateVector: qubit count " + std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(qubit_cap) + "]");
        amps_.assign(std::uint64_t{1} << q_, Amplitude{0.0, 0.0});
        amps_[0] = 1.0;
    }

    static StateVector basis(int num_qubits, std::uint64_t index, int qubit_cap = kDefaultQubitCap) {
        StateVector s(num_qubits, qubit_cap);
        if (index >= s.size()) throw DomainError("StateVector::basis: index out of range");
        s.amps_[0] = 0.0;
        s.amps_[index] = 1.0;
        return s;
    }

    int num_qubits() const { return q_; }
    std::uint64_t size() const { return amps_.size(); }
    Amplitude& operator[](std::uint64_t i) { return amps_[i]; }
    const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    // Fixed ascending-index summation so repeated runs agree bit for bit.
    double norm_sq() const {
        double total = 0.0;
        for (const Amplitude& a : amps_) total += std::norm(a);
        return total;
    }

private:
    int q_;
    std::vector<Amplitude> amps_;
};

inline std::vector<int> make_register(int offset, int width) {
    std::vector<int> reg(width);
    for (int i = 0; i < width; ++i) reg[i] = offset + i;
    return reg;
}

namespace detail {

inline void check_qubits(const StateVector& s, std::span<const int> qubits) {
    std::uint64_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= s.num_qubits())
            throw QubitIndexError("qubit index " + std::to_string(q) + " outside [0, " +
                                  std::to_string(s.num_qubits()) + ")");
        if (seen & (std::uint64_t{1} << q))
            throw QubitIndexError("duplicate qubit index " + std::to_string(q));
        seen |= std::uint64_t{1} << q;
    }
}

// Bit gather/scatter between a register-local value and a global index, with
// a fast path for registers that are consecutive ascending qubits.
struct RegView {
    std::vector<int> qubits;
    bool contiguous = false;
    int offset = 0;
    std::uint64_t mask = 0;

    explicit RegView(std::span<const int> qs) : qubits(qs.begin(), qs.end()) {
        contiguous = !qubits.empty();
        for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
            if (qubits[i + 1] != qubits[i] + 1) contiguous = false;
        offset = qubits.empty() ? 0 : qubits.front();
        mask = (qubits.size() >= 64) ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << qubits.size()) - 1);
    }

    int width() const { return static_cast<int>(qubits.size()); }

    std::uint64_t extract(std::uint64_t index) const {
        if (contiguous) return (index >> offset) & mask;
        std::uint64_t v = 0;
        for (std::size_t m = 0; m < qubits.size(); ++m)
            v |= ((index >> qubits[m]) & 1ull) << m;
        return v;
    }

    std::uint64_t spread(std::uint64_t value) const {
        if (contiguous) return (value & mask) << offset;
        std::uint64_t idx = 0;
        for (std::size_t m = 0; m < qubits.size(); ++m)
            idx |= ((value >> m) & 1ull) << qubits[m];
        return idx;
    }
};

inline std::vector<int> complement_qubits(const StateVector& s, const RegView& view) {
    std::uint64_t used = 0;
    for (int q : view.qubits) used |= std::uint64_t{1} << q;
    std::vector<int> rest;
    for (int q = 0; q < s.num_qubits(); ++q)
        if (!(used & (std::uint64_t{1} << q))) rest.push_back(q);
    return rest;
}

// Evaluates the oracle once per distinct register value.
inline std::vector<std::uint8_t> oracle_table(const BooleanOracle& oracle, int width) {
    std::vector<std::uint8_t> vals(std::uint64_t{1} << width);
    for (std::uint64_t x = 0; x < vals.size(); ++x)
        vals[x] = static_cast<std::uint8_t>(oracle(x));
    return vals;
}

} // namespace detail

inline StateVector init_uniform(int num_qubits, int qubit_cap = kDefaultQubitCap) {
    StateVector s(num_qubits, qubit_cap);
    const double amp = std::pow(2.0, -0.5 * num_qubits);
    for (std::uint64_t i = 0; i < s.size(); ++i) s[i] = amp;
    return s;
}

inline void apply_hadamard(StateVector& s, int qubit) {
    detail::check_qubits(s, std::span<const int>(&qubit, 1));
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (i & mask) continue;
        const Amplitude a = s[i];
        const Amplitude b = s[i | mask];
        s[i] = (a + b) * inv_sqrt2;
        s[i | mask] = (a - b) * inv_sqrt2;
    }
}

inline void apply_hadamard_layer(StateVector& s, std::span<const int> qubits) {
    for (int q : qubits) apply_hadamard(s, q);
}

// |x>|y> -> |x>|y xor oracle(x)> on the given input register and target
// qubit. Counts one application and one evaluation per distinct x.
inline void apply_xor_oracle(StateVector& s, const BooleanOracle& oracle,
                             std::span<const int> input_qubits, int target_qubit) {
    detail::check_qubits(s, input_qubits);
    detail::check_qubits(s, std::span<const int>(&target_qubit, 1));
    for (int q : input_qubits)
        if (q == target_qubit) throw QubitIndexError("xor oracle target overlaps input register");
    if (oracle.arity() != static_cast<int>(input_qubits.size()))
        throw ArityMismatch("xor oracle arity " + std::to_string(oracle.arity()) +
                            " != register width " + std::to_string(input_qubits.size()));
    const detail::RegView view(input_qubits);
    const auto vals = detail::oracle_table(oracle, view.width());
    oracle.count_application();
    const std::uint64_t tmask = std::uint64_t{1} << target_qubit;
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (i & tmask) continue;
        if (vals[view.extract(i)]) std::swap(s[i], s[i | tmask]);
    }
}

namespace detail {

inline void phase_flip(StateVector& s, const BooleanOracle& predicate,
                       std::span<const int> input_qubits, int control) {
    check_qubits(s, input_qubits);
    if (control >= 0) {
        check_qubits(s, std::span<const int>(&control, 1));
        for (int q : input_qubits)
            if (q == control) throw QubitIndexError("phase oracle control overlaps input register");
    }
    if (predicate.arity() != static_cast<int>(input_qubits.size()))
        throw ArityMismatch("phase oracle arity " + std::to_string(predicate.arity()) +
                            " != register width " + std::to_string(input_qubits.size()));
    const RegView view(input_qubits);
    const auto vals = oracle_table(predicate, view.width());
    predicate.count_application();
    const std::uint64_t cmask = control >= 0 ? (std::uint64_t{1} << control) : 0;
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (cmask && !(i & cmask)) continue;
        if (vals[view.extract(i)]) s[i] = -s[i];
    }
}

inline void invert_about_mean(StateVector& s, std::span<const int> input_qubits, int control) {
    check_qubits(s, input_qubits);
    if (control >= 0) {
        check_qubits(s, std::span<const int>(&control, 1));
        for (int q : input_qubits)
            if (q == control) throw QubitIndexError("diffusion control overlaps input register");
    }
    const RegView view(input_qubits);
    const auto rest = complement_qubits(s, view);
    const RegView rest_view(rest);
    const std::uint64_t reg_count = std::uint64_t{1} << view.width();
    const std::uint64_t rest_count = s.size() >> view.width();
    const std::uint64_t cmask = control >= 0 ? (std::uint64_t{1} << control) : 0;
    const double inv = 1.0 / static_cast<double>(reg_count);
    for (std::uint64_t r = 0; r < rest_count; ++r) {
        const std::uint64_t base = rest_view.spread(r);
        if (cmask && !(base & cmask)) continue;
        Amplitude sum{0.0, 0.0};
        for (std::uint64_t x = 0; x < reg_count; ++x) sum += s[base | view.spread(x)];
        const Amplitude two_mean = 2.0 * sum * inv;
        for (std::uint64_t x = 0; x < reg_count; ++x) {
            const std::uint64_t idx = base | view.spread(x);
            s[idx] = two_mean - s[idx];
        }
    }
}

// Direct DFT on the register's value index; ham-fisted O(4^t) per group but
// exact to the definition. sign=-1 gives the inverse transform.
inline void dft_register(StateVector& s, std::span<const int> reg, int sign) {
    check_qubits(s, reg);
    if (reg.empty()) throw QubitIndexError("empty register for Fourier transform");
    const RegView view(reg);
    const auto rest = complement_qubits(s, view);
    const RegView rest_view(rest);
    const std::uint64_t dim = std::uint64_t{1} << view.width();
    const std::uint64_t rest_count = s.size() >> view.width();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> twiddle(dim);
    for (std::uint64_t m = 0; m < dim; ++m) {
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(m)
                             / static_cast<double>(dim);
        twiddle[m] = Amplitude{std::cos(angle), std::sin(angle)};
    }
    std::vector<Amplitude> in(dim), out(dim);
    for (std::uint64_t r = 0; r < rest_count; ++r) {
        const std::uint64_t base = rest_view.spread(r);
        for (std::uint64_t k = 0; k < dim; ++k) in[k] = s[base | view.spread(k)];
        for (std::uint64_t y = 0; y < dim; ++y) {
            Amplitude acc{0.0, 0.0};
            for (std::uint64_t k = 0; k < dim; ++k) acc += twiddle[(y * k) % dim] * in[k];
            out[y] = acc * scale;
        }
        for (std::uint64_t y = 0; y < dim; ++y) s[base | view.spread(y)] = out[y];
    }
}

} // namespace detail

// Negates the amplitudes the predicate marks; self-inverse and norm
// preserving.
inline void apply_phase_oracle(StateVector& s, const BooleanOracle& predicate,
                               std::span<const int> input_qubits) {
    detail::phase_flip(s, predicate, input_qubits, -1);
}

inline void apply_phase_oracle_controlled(StateVector& s, const BooleanOracle& predicate,
                                          std::span<const int> input_qubits, int control) {
    if (control < 0) throw QubitIndexError("controlled phase oracle needs a control qubit");
    detail::phase_flip(s, predicate, input_qubits, control);
}

// 2|s><s| - I on the input register (inversion about the register mean).
inline void apply_diffusion(StateVector& s, std::span<const int> input_qubits) {
    detail::invert_about_mean(s, input_qubits, -1);
}

inline void apply_diffusion_controlled(StateVector& s, std::span<const int> input_qubits,
                                       int control) {
    if (control < 0) throw QubitIndexError("controlled diffusion needs a control qubit");
    detail::invert_about_mean(s, input_qubits, control);
}

inline void apply_qft(StateVector& s, std::span<const int> reg) {
    detail::dft_register(s, reg, +1);
}

inline void apply_inverse_qft(StateVector& s, std::span<const int> reg) {
    detail::dft_register(s, reg, -1);
}

// Born-rule measurement of a register: one uniform draw against the
// cumulative outcome probabilities in ascending outcome order, then collapse
// and renormalize. Deterministic given the rng stream.
inline std::uint64_t measure_register(StateVector& s, std::span<const int> reg, Rng& rng) {
    detail::check_qubits(s, reg);
    if (reg.empty()) throw QubitIndexError("empty register for measurement");
    const detail::RegView view(reg);
    const auto rest = detail::complement_qubits(s, view);
    const detail::RegView rest_view(rest);
    const std::uint64_t outcomes = std::uint64_t{1} << view.width();
    const std::uint64_t rest_count = s.size() >> view.width();

    const double total = s.norm_sq();
    if (total < 1e-9)
        throw DegenerateState("measure_register: state norm " + std::to_string(total) +
                              " below 1e-9");
    const double u = rng.next_unit() * total;

    double cum = 0.0;
    double selected_prob = 0.0;
    std::uint64_t selected = 0;
    bool found = false;
    for (std::uint64_t v = 0; v < outcomes; ++v) {
        double p = 0.0;
        const std::uint64_t vbits = view.spread(v);
        for (std::uint64_t r = 0; r < rest_count; ++r) p += std::norm(s[vbits | rest_view.spread(r)]);
        cum += p;
        if (p > 0.0) {
            // remember the last outcome with mass in case u lands on the fp tail
            selected = v;
            selected_prob = p;
        }
        if (u < cum) {
            found = true;
            break;
        }
    }
    (void)found; // tail fallthrough keeps the last outcome with positive mass

    const std::uint64_t regmask = view.spread(view.mask);
    const std::uint64_t vbits = view.spread(selected);
    const double renorm = 1.0 / std::sqrt(selected_prob);
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if ((i & regmask) == vbits)
            s[i] *= renorm;
        else
            s[i] = 0.0;
    }
    return selected;
}

} // namespace qdual
