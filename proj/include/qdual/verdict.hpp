#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace qdual {

enum class Reason {
    AllTestsPassed,
    NotBalanced,
    HNotConstantZero,
    CountMismatch,
    WitnessFound,
    IntersectionViolated,
};

inline constexpr std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::AllTestsPassed: return "AllTestsPassed";
        case Reason::NotBalanced: return "NotBalanced";
        case Reason::HNotConstantZero: return "HNotConstantZero";
        case Reason::CountMismatch: return "CountMismatch";
        case Reason::WitnessFound: return "WitnessFound";
        case Reason::IntersectionViolated: return "IntersectionViolated";
    }
    return "?";
}

// Decision outcome. A witness is carried only for WitnessFound (an input x
// certifying the violation) and IntersectionViolated (the characteristic
// vector of the offending implicant).
struct Verdict {
    bool answer = false;
    Reason reason = Reason::AllTestsPassed;
    std::optional<std::uint64_t> witness;

    static Verdict yes() { return {true, Reason::AllTestsPassed, std::nullopt}; }
    static Verdict no(Reason r, std::optional<std::uint64_t> w = std::nullopt) {
        return {false, r, w};
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

} // namespace qdual
