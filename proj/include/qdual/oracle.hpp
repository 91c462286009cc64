#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>

#include "qdual/errors.hpp"

namespace qdual {

// Counted handle over a total boolean function on [0, 2^arity). Copies share
// the counters, so the handle can be passed around a pipeline and tallied at
// the end. Counter updates are atomic: concurrent evaluations never lose
// increments. `query_count` counts individual evaluations; `applications`
// counts whole quantum oracle applications (one per U_f/phase-oracle use) and
// is bumped by the simulator.
class BooleanOracle {
public:
    using Fn = std::function<int(std::uint64_t)>;

    BooleanOracle(int arity, Fn fn)
        : arity_(arity), fn_(std::move(fn)),
          counters_(std::make_shared<Counters>()) {
        if (arity_ < 1 || arity_ > 62)
            throw DomainError("oracle arity must be in [1, 62], got " + std::to_string(arity_));
    }

    int arity() const { return arity_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << arity_; }

    int operator()(std::uint64_t x) const {
        if (x >= domain_size())
            throw DomainError("oracle input " + std::to_string(x) + " out of range for arity " +
                              std::to_string(arity_));
        counters_->evaluations.fetch_add(1, std::memory_order_relaxed);
        return fn_(x) ? 1 : 0;
    }

    std::uint64_t query_count() const {
        return counters_->evaluations.load(std::memory_order_relaxed);
    }

    std::uint64_t applications() const {
        return counters_->applications.load(std::memory_order_relaxed);
    }

    void count_application() const {
        counters_->applications.fetch_add(1, std::memory_order_relaxed);
    }

private:
    struct Counters {
        std::atomic<std::uint64_t> evaluations{0};
        std::atomic<std::uint64_t> applications{0};
    };

    int arity_;
    Fn fn_;
    std::shared_ptr<Counters> counters_;
};

inline BooleanOracle constant_oracle(int arity, int value) {
    return BooleanOracle(arity, [value](std::uint64_t) { return value; });
}

} // namespace qdual
