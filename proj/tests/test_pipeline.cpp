#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>

#include "qdual/corpus.hpp"
#include "qdual/pipeline.hpp"

#include "support.hpp"

using namespace qdual;

namespace {

SimConfig seeded(std::uint64_t seed) {
    SimConfig cfg;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("self-dual pipeline accepts the majority function") {
    const MonotoneDNF maj5 = generate_majority(5);
    std::set<std::uint64_t> counting_outcomes;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto trace = quantum_self_dual(maj5, seeded(seed));
        CHECK(trace.final.answer);
        CHECK(trace.final.reason == Reason::AllTestsPassed);
        REQUIRE(trace.steps.size() == 5);
        CHECK(trace.t_used == 3);
        counting_outcomes.insert(*trace.steps[2].measured);
    }
    // t = 3: the two eigenphase branches are y = 2 and y = 6
    for (std::uint64_t y : counting_outcomes) CHECK((y == 2 || y == 6));
    CHECK(counting_outcomes.size() == 2); // both branches show up across seeds
}

TEST_CASE("self-dual pipeline rejects the 2-variable AND on every seed") {
    const MonotoneDNF and2(2, {{1, 2}});
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto trace = quantum_self_dual(and2, seeded(seed));
        CHECK_FALSE(trace.final.answer);
        const auto report = cross_validate(and2, std::nullopt, trace);
        CHECK(report.agree);
        CHECK_FALSE(report.defect);
        if (trace.final.reason == Reason::WitnessFound) {
            const std::uint64_t w = *trace.final.witness;
            CHECK(and2.evaluate(w) == and2.evaluate(complement_index(w, 2)));
        }
    }
}

TEST_CASE("self-dual pipeline accepts a dictatorship on every seed") {
    const MonotoneDNF f(2, {{1}});
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto trace = quantum_self_dual(f, seeded(seed));
        CHECK(trace.final.answer);
    }
}

TEST_CASE("pipeline input validation") {
    CHECK_THROWS_AS(quantum_self_dual(MonotoneDNF(3, {}), seeded(0)), ConstantFunction);
    CHECK_THROWS_AS(quantum_self_dual(MonotoneDNF(1, {{1}}), seeded(0)), DomainError);
    SimConfig tight = seeded(0);
    tight.qubit_cap = 8;
    CHECK_THROWS_AS(quantum_self_dual(generate_majority(9), tight), ArityTooLarge);
    SimConfig bad = seeded(0);
    bad.grover_growth = 1.0;
    CHECK_THROWS_AS(quantum_self_dual(generate_majority(5), bad), DomainError);
    SimConfig narrow = seeded(0);
    narrow.t_override = 1;
    CHECK_THROWS_AS(quantum_self_dual(generate_majority(5), narrow), WidthTooSmall);
}

TEST_CASE("strict mode reproduces the one-branch rule") {
    const MonotoneDNF maj5 = generate_majority(5);
    SimConfig strict = seeded(0);
    strict.strict_counting = true;
    int accepted = 0, count_rejected = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        strict.seed = seed;
        const auto trace = quantum_self_dual(maj5, strict);
        if (trace.final.answer)
            ++accepted;
        else if (trace.final.reason == Reason::CountMismatch)
            ++count_rejected;
    }
    // the conjugate branch fires about half the time and is the only rejection
    CHECK(accepted + count_rejected == 200);
    CHECK(accepted > 60);
    CHECK(count_rejected > 60);
}

TEST_CASE("trace structure and accounting") {
    const MonotoneDNF maj5 = generate_majority(5);
    const auto trace = quantum_self_dual(maj5, seeded(9));
    SECTION("steps are consecutive from 1") {
        for (std::size_t i = 0; i < trace.steps.size(); ++i)
            CHECK(trace.steps[i].step == static_cast<int>(i) + 1);
    }
    SECTION("per-step queries add up to the module totals") {
        CHECK(trace.step_query_total() == trace.queries.total());
    }
    SECTION("a rejection ends the trace at the matching step") {
        const MonotoneDNF or2(2, {{1}, {2}});
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto t = quantum_self_dual(or2, seeded(seed));
            REQUIRE_FALSE(t.final.answer);
            CHECK(t.steps.back().decision == "reject");
            switch (t.final.reason) {
                case Reason::NotBalanced: CHECK(t.steps.back().step == 1); break;
                case Reason::HNotConstantZero: CHECK(t.steps.back().step == 2); break;
                case Reason::CountMismatch: CHECK(t.steps.back().step == 3); break;
                case Reason::WitnessFound: CHECK(t.steps.back().step == 4); break;
                default: FAIL("unexpected rejection reason");
            }
            // witnesses only accompany the reasons that can certify one
            const bool carries = t.final.reason == Reason::WitnessFound ||
                                 t.final.reason == Reason::IntersectionViolated;
            CHECK(t.final.witness.has_value() == carries);
        }
    }
    SECTION("counting consumes 2^t - 1 iterate applications") {
        CHECK(trace.queries.counting == (std::uint64_t{1} << trace.t_used) - 1);
    }
}

TEST_CASE("dual-pair pipeline") {
    const MonotoneDNF and2(2, {{1, 2}});
    const MonotoneDNF or2(2, {{1}, {2}});
    SECTION("AND/OR accepted on both routes") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto direct = quantum_dual_pair(and2, or2, seeded(seed), DualRoute::Direct);
            const auto reduction = quantum_dual_pair(and2, or2, seeded(seed), DualRoute::Reduction);
            CHECK(direct.final.answer);
            CHECK(reduction.final.answer);
        }
    }
    SECTION("disjoint singletons rejected classically before any quantum step") {
        const MonotoneDNF f(2, {{1}});
        const MonotoneDNF g(2, {{2}});
        const auto trace = quantum_dual_pair(f, g, seeded(0), DualRoute::Direct);
        CHECK_FALSE(trace.final.answer);
        CHECK(trace.final.reason == Reason::IntersectionViolated);
        CHECK(trace.final.witness == 1); // characteristic vector of {1}
        CHECK(trace.steps.size() == 1);
        CHECK(trace.steps.front().step == 0);
        CHECK(trace.queries.total() == 0);
    }
    SECTION("AND against itself rejected on both routes") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto direct = quantum_dual_pair(and2, and2, seeded(seed), DualRoute::Direct);
            CHECK_FALSE(direct.final.answer);
            if (direct.final.reason == Reason::WitnessFound) {
                const auto h = build_h_oracle(and2, and2);
                CHECK(h(*direct.final.witness) == 1);
            }
            const auto reduction = quantum_dual_pair(and2, and2, seeded(seed), DualRoute::Reduction);
            CHECK_FALSE(reduction.final.answer);
        }
    }
    SECTION("dual-pair traces start at step 0") {
        const auto trace = quantum_dual_pair(and2, or2, seeded(3), DualRoute::Direct);
        for (std::size_t i = 0; i < trace.steps.size(); ++i)
            CHECK(trace.steps[i].step == static_cast<int>(i));
        CHECK(trace.step_query_total() == trace.queries.total());
        const auto red = quantum_dual_pair(and2, or2, seeded(3), DualRoute::Reduction);
        CHECK(red.step_query_total() == red.queries.total());
        CHECK(red.steps.front().step == 0);
        CHECK(red.steps.back().step == 5);
    }
    SECTION("arity mismatch refused") {
        CHECK_THROWS_AS(quantum_dual_pair(and2, MonotoneDNF(3, {{1}}), seeded(0), DualRoute::Direct),
                        ArityMismatch);
    }
}

TEST_CASE("direct and reduction routes agree on random pairs") {
    Rng rng(71);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(rng.next_below(5)); // reduction stays small
        const MonotoneDNF f = random_antichain(CorpusParams{n}, rng);
        const MonotoneDNF g = random_antichain(CorpusParams{n}, rng);
        const std::uint64_t seed = rng.next_u64();
        const auto direct = quantum_dual_pair(f, g, seeded(seed), DualRoute::Direct);
        const auto reduction = quantum_dual_pair(f, g, seeded(seed), DualRoute::Reduction);
        CHECK(direct.final.answer == reduction.final.answer);
        const bool truth = is_dual_pair_brute(f, g).answer;
        // rejections are exact; acceptances carry the one-sided risk
        if (!direct.final.answer) CHECK_FALSE(truth);
        if (!reduction.final.answer) CHECK_FALSE(truth);
    }
}

TEST_CASE("cross_validate classifications") {
    const MonotoneDNF maj5 = generate_majority(5);
    const auto good = quantum_self_dual(maj5, seeded(1));
    const auto report = cross_validate(maj5, std::nullopt, good);
    CHECK(report.agree);
    CHECK(report.classification == "agreement");

    // a fabricated quantum-True on a non-self-dual input is the one-sided error
    const MonotoneDNF and2(2, {{1, 2}});
    VerdictTrace fake;
    fake.final = Verdict::yes();
    const auto one_sided = cross_validate(and2, std::nullopt, fake);
    CHECK_FALSE(one_sided.agree);
    CHECK_FALSE(one_sided.defect);
    CHECK(one_sided.classification == "one_sided_error");

    // and a fabricated quantum-False on a self-dual input is a defect
    VerdictTrace bad;
    bad.final = Verdict::no(Reason::WitnessFound, 0);
    const auto defect = cross_validate(maj5, std::nullopt, bad);
    CHECK(defect.defect);
    CHECK(defect.classification == "defect");
}

TEST_CASE("trace JSON is stable and schema-complete") {
    const MonotoneDNF maj5 = generate_majority(5);
    const auto a = quantum_self_dual(maj5, seeded(7));
    const auto b = quantum_self_dual(maj5, seeded(7));
    CHECK(trace_json(a) == trace_json(b));
    CHECK(to_json(a)["config"]["seed"] == 7);

    const auto j = to_json(a);
    for (const char* key : {"config", "final", "queries", "steps"}) CHECK(j.contains(key));
    for (const char* key : {"seed", "t", "lambda", "R", "strict"}) CHECK(j["config"].contains(key));
    for (const char* key : {"answer", "reason", "witness"}) CHECK(j["final"].contains(key));
    for (const char* key : {"dj", "counting", "grover", "classical"})
        CHECK(j["queries"].contains(key));
    for (const auto& step : j["steps"])
        for (const char* key : {"step", "name", "measured", "queries", "decision"})
            CHECK(step.contains(key));
}
