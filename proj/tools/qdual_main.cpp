// Command-line front end: self-duality and duality checks for prime monotone
// boolean functions in .dnf files, majority-family generation, and a
// quantum-vs-classical benchmark harness.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "qdual/qdual.hpp"

namespace {

struct RunOptions {
    std::uint64_t seed = 0;
    int t_override = 0; // 0 = ceil(n/2)
    bool strict = false;
    std::string method = "quantum"; // quantum | classical | both
    std::string route = "direct";   // direct | reduction
    bool json_out = false;
    bool minimize = false;
    std::string out_path;
};

qdual::SimConfig make_config(const RunOptions& opts) {
    qdual::SimConfig cfg;
    cfg.seed = opts.seed;
    cfg.strict_counting = opts.strict;
    if (opts.t_override > 0) cfg.t_override = opts.t_override;
    return cfg;
}

qdual::MonotoneDNF load_dnf(const std::string& path, bool minimize) {
    std::ifstream in(path);
    if (!in) throw qdual::Error("cannot open " + path);
    return qdual::parse_dnf(in, qdual::ParseOptions{minimize});
}

std::string verdict_line(const qdual::Verdict& v) {
    std::ostringstream out;
    out << (v.answer ? "true" : "false") << " (" << qdual::to_string(v.reason);
    if (v.witness) out << ", witness=" << *v.witness;
    out << ")";
    return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qdual::Error("cannot write " + out_path);
    out << text;
}

int finish_check(const qdual::MonotoneDNF& f, const std::optional<qdual::MonotoneDNF>& g,
                 const std::optional<qdual::VerdictTrace>& trace,
                 const std::optional<qdual::Verdict>& classical, const RunOptions& opts,
                 const char* label) {
    const qdual::Verdict& verdict = trace ? trace->final : *classical;
    if (opts.json_out) {
        nlohmann::json j;
        if (trace) {
            j = qdual::to_json(*trace);
        } else {
            j["final"] = qdual::to_json(*classical);
            j["method"] = "classical";
        }
        if (trace && classical) {
            const auto report = qdual::cross_validate(f, g, *trace);
            j["cross_check"] = {{"agree", report.agree},
                                {"classification", report.classification},
                                {"classical", qdual::to_json(report.classical)}};
        }
        emit(j.dump(2) + "\n", opts.out_path);
    } else {
        std::ostringstream out;
        out << label << ": " << verdict_line(verdict) << "\n";
        if (trace && classical) {
            const auto report = qdual::cross_validate(f, g, *trace);
            out << "classical: " << verdict_line(report.classical) << " ["
                << report.classification << "]\n";
        }
        emit(out.str(), opts.out_path);
    }
    if (trace && classical) {
        const auto report = qdual::cross_validate(f, g, *trace);
        if (report.defect) {
            std::cerr << "defect: quantum False on a classically True input\n";
            return 2;
        }
    }
    return verdict.answer ? 0 : 1;
}

int cmd_self_dual(const std::string& path, const RunOptions& opts) {
    const qdual::MonotoneDNF f = load_dnf(path, opts.minimize);
    std::optional<qdual::VerdictTrace> trace;
    std::optional<qdual::Verdict> classical;
    if (opts.method != "classical") trace = qdual::quantum_self_dual(f, make_config(opts));
    if (opts.method != "quantum") classical = qdual::is_self_dual_brute(f);
    return finish_check(f, std::nullopt, trace, classical, opts, "self-dual");
}

int cmd_dual(const std::string& f_path, const std::string& g_path, const RunOptions& opts) {
    const qdual::MonotoneDNF f = load_dnf(f_path, opts.minimize);
    const qdual::MonotoneDNF g = load_dnf(g_path, opts.minimize);
    const auto route =
        opts.route == "reduction" ? qdual::DualRoute::Reduction : qdual::DualRoute::Direct;
    std::optional<qdual::VerdictTrace> trace;
    std::optional<qdual::Verdict> classical;
    if (opts.method != "classical") trace = qdual::quantum_dual_pair(f, g, make_config(opts), route);
    if (opts.method != "quantum") classical = qdual::is_dual_pair_brute(f, g);
    return finish_check(f, g, trace, classical, opts, "dual");
}

int cmd_gen(const std::string& family, int n, const std::string& out_path) {
    if (family != "majority") throw qdual::Error("unknown family `" + family + "`");
    const qdual::MonotoneDNF maj = qdual::generate_majority(n);
    const std::string text = qdual::serialize_dnf(maj);
    if (out_path.empty()) {
        std::cout << text;
        std::cerr << "implicants: " << maj.implicants().size() << "\n";
    } else {
        emit(text, out_path);
        std::cout << "implicants: " << maj.implicants().size() << " -> " << out_path << "\n";
    }
    return 0;
}

struct BenchRow {
    int n = 0;
    int instance_id = 0;
    std::uint64_t seed = 0;
    bool quantum_answer = false;
    bool classical_answer = false;
    std::uint64_t dj = 0, counting = 0, grover = 0;
    bool agree = false;
    bool defect = false;
};

struct BenchOptions {
    int n_min = 4;
    int n_max = 10;
    int count = 50;
    std::uint64_t seed = 0;
    bool planted = false;
    int threads = 0;
    std::string out_path;
};

BenchRow bench_one(int n, int instance_id, std::uint64_t gen_seed, std::uint64_t run_seed,
                   bool planted) {
    BenchRow row;
    row.n = n;
    row.instance_id = instance_id;
    row.seed = run_seed;
    qdual::SimConfig cfg;
    cfg.seed = run_seed;
    if (planted) {
        qdual::Rng gen(gen_seed);
        const std::uint64_t x_star = gen.next_below(std::uint64_t{1} << n);
        const auto predicate = qdual::planted_violation_oracle(n, x_star);
        qdual::Rng run(run_seed);
        const auto found = qdual::grover_search_unknown(predicate, cfg, run);
        row.grover = found.oracle_applications + found.verification_queries;
        row.quantum_answer = !found.solution.has_value(); // "self-dual" iff no witness surfaced
        row.classical_answer = false;                     // a violation is planted by construction
    } else {
        qdual::Rng gen(gen_seed);
        const qdual::MonotoneDNF f = qdual::random_antichain(qdual::CorpusParams{n}, gen);
        const auto trace = qdual::quantum_self_dual(f, cfg);
        const auto report = qdual::cross_validate(f, std::nullopt, trace);
        row.quantum_answer = trace.final.answer;
        row.classical_answer = report.classical.answer;
        row.dj = trace.queries.dj;
        row.counting = trace.queries.counting;
        row.grover = trace.queries.grover + trace.queries.classical;
        row.defect = report.defect;
    }
    row.agree = row.quantum_answer == row.classical_answer;
    return row;
}

int cmd_bench(const BenchOptions& opts) {
    if (opts.n_min < 2 || opts.n_max < opts.n_min)
        throw qdual::Error("bench needs a non-empty range with n >= 2");
    const int pipeline_cap = opts.planted ? qdual::kDefaultQubitCap : 17; // n + ceil(n/2) <= 26
    if (opts.n_max > pipeline_cap)
        throw qdual::Error("bench range exceeds the simulator cap (max n " +
                           std::to_string(pipeline_cap) + ")");
    if (opts.count < 1) throw qdual::Error("bench needs a positive instance count");

    const int sizes = opts.n_max - opts.n_min + 1;
    const std::size_t total = static_cast<std::size_t>(sizes) * opts.count;
    std::vector<BenchRow> rows(total);
    const int workers = opts.threads > 0
                            ? opts.threads
                            : std::max(1u, std::thread::hardware_concurrency());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            const int n = opts.n_min + static_cast<int>(idx) / opts.count;
            const int instance_id = static_cast<int>(idx) % opts.count;
            const std::uint64_t gen_seed = qdual::derive_stream_seed(opts.seed, 2 * idx);
            const std::uint64_t run_seed = qdual::derive_stream_seed(opts.seed, 2 * idx + 1);
            rows[idx] = bench_one(n, instance_id, gen_seed, run_seed, opts.planted);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "# qdual bench mode=" << (opts.planted ? "planted" : "random") << " base_seed="
        << opts.seed << " count=" << opts.count << " n=[" << opts.n_min << "," << opts.n_max
        << "]\n";
    if (!opts.planted)
        csv << "# generator per instance: " << qdual::CorpusParams{opts.n_min}.describe()
            << " (num_vars/implicant_attempts/max_size follow the row's n)\n";
    csv << "n,instance_id,seed,quantum_answer,classical_answer,dj_queries,counting_queries,"
           "grover_queries,agree\n";
    bool defect = false;
    for (const BenchRow& row : rows) {
        csv << row.n << ',' << row.instance_id << ',' << row.seed << ','
            << (row.quantum_answer ? "true" : "false") << ','
            << (row.classical_answer ? "true" : "false") << ',' << row.dj << ',' << row.counting
            << ',' << row.grover << ',' << (row.agree ? "true" : "false") << '\n';
        defect = defect || row.defect;
    }
    emit(csv.str(), opts.out_path);

    std::ostream& summary = opts.out_path.empty() ? std::cerr : std::cout;
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        double grover_sum = 0.0;
        for (const BenchRow& row : rows)
            if (row.n == n) grover_sum += static_cast<double>(row.grover);
        const double mean = grover_sum / opts.count;
        summary << "n=" << n << " mean_grover_queries=" << mean;
        if (opts.planted) summary << " reference_9*2^(n/2)=" << 9.0 * std::pow(2.0, n / 2.0);
        summary << "\n";
    }
    if (defect) {
        std::cerr << "defect: quantum False on a classically True input\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"duality checks for prime monotone boolean functions"};
    app.require_subcommand(1);

    RunOptions opts;
    std::string f_path, g_path;

    auto add_common = [&opts](CLI::App* cmd, bool with_route) {
        cmd->add_option("--seed", opts.seed, "rng seed");
        cmd->add_option("--t", opts.t_override, "counting register width override (>= 2)");
        cmd->add_flag("--strict", opts.strict, "accept only the principal counting outcome");
        cmd->add_option("--method", opts.method, "quantum | classical | both")
            ->check(CLI::IsMember({"quantum", "classical", "both"}));
        cmd->add_flag("--json", opts.json_out, "emit the trace as JSON");
        cmd->add_flag("--minimize", opts.minimize, "strip superset implicants while parsing");
        cmd->add_option("-o,--output", opts.out_path, "write output to this path");
        if (with_route)
            cmd->add_option("--route", opts.route, "direct | reduction")
                ->check(CLI::IsMember({"direct", "reduction"}));
    };

    CLI::App* self_dual = app.add_subcommand("self-dual", "decide self-duality of one .dnf file");
    self_dual->add_option("file", f_path, "input .dnf file")->required();
    add_common(self_dual, false);

    CLI::App* dual = app.add_subcommand("dual", "decide whether g is the dual of f");
    dual->add_option("f", f_path, "first .dnf file")->required();
    dual->add_option("g", g_path, "second .dnf file")->required();
    add_common(dual, true);

    std::string family = "majority";
    int gen_n = 0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a named function family");
    gen->add_option("family", family, "family name (majority)")->required();
    gen->add_option("--n", gen_n, "number of variables")->required();
    gen->add_option("-o,--output", gen_out, "write the .dnf here instead of stdout");

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "query-count benchmark over random corpora");
    bench_cmd->add_option("--n-min", bench.n_min, "smallest arity");
    bench_cmd->add_option("--n-max", bench.n_max, "largest arity");
    bench_cmd->add_option("--count", bench.count, "instances per arity");
    bench_cmd->add_option("--seed", bench.seed, "base seed");
    bench_cmd->add_flag("--planted", bench.planted,
                        "plant single-violation instances and benchmark the witness search");
    bench_cmd->add_option("--threads", bench.threads, "worker threads (default: hardware)");
    bench_cmd->add_option("-o,--output", bench.out_path, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (self_dual->parsed()) return cmd_self_dual(f_path, opts);
        if (dual->parsed()) return cmd_dual(f_path, g_path, opts);
        if (gen->parsed()) return cmd_gen(family, gen_n, gen_out);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const qdual::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
