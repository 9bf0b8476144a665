// mis: command-line front-end for the exact influence solvers.
//
// Exit codes: 0 ok, 2 parse or flag error, 3 graph class mismatch,
// 4 oracle size guard, 5 verification mismatches.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "mis/bench.hpp"
#include "mis/diffusion.hpp"
#include "mis/errors.hpp"
#include "mis/generate.hpp"
#include "mis/instance_io.hpp"
#include "mis/oracle.hpp"
#include "mis/report.hpp"
#include "mis/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitOracle = 4;
constexpr int kExitMismatch = 5;

struct SolveOptions {
    std::string instance;
    std::string solver = "auto";
    bool trace = false;
    std::string output = "json";
};

struct VerifyOptions {
    std::string cls;
    std::size_t count = 100;
    std::size_t max_n = 10;
    std::int64_t max_lambda = 4;
    std::int64_t max_beta = 4;
    std::uint64_t rng_seed = 1;
};

struct GenerateOptions {
    std::string cls;
    std::size_t n = 0;
    std::string thresholds = "uniform";
    std::int64_t lambda = 1;
    std::int64_t beta = 1;
    std::uint64_t rng_seed = 1;
    std::string out;
    std::string name;
};

int cmd_solve(const SolveOptions& opt) {
    const auto file = mis::read_instance(opt.instance);
    std::optional<mis::SolverKind> kind;
    if (opt.solver != "auto") kind = mis::parse_solver_kind(opt.solver);

    const auto t0 = std::chrono::steady_clock::now();
    mis::SolutionReport report{mis::solve(file.instance, kind)};
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (opt.trace) report.solution.trace = mis::simulate(file.instance, report.solution.seeds);

    std::cout << (opt.output == "text" ? mis::to_text(report) : mis::to_json(report) + "\n");
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
    const auto cls = mis::parse_graph_class(opt.cls);
    const std::size_t min_n = cls == mis::GraphClass::Cycle ? 3 : 1;
    if (opt.max_n < min_n) throw mis::InputError("--max-n must be at least " + std::to_string(min_n));
    const auto kind = [&] {
        switch (cls) {
        case mis::GraphClass::Path: return mis::SolverKind::Path;
        case mis::GraphClass::Cycle: return mis::SolverKind::Cycle;
        case mis::GraphClass::Complete: return mis::SolverKind::Complete;
        case mis::GraphClass::Tree: return mis::SolverKind::Tree;
        default: throw mis::InputError("--class must be one of tree, path, cycle, complete");
        }
    }();

    std::mt19937_64 rng(opt.rng_seed);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < opt.count; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(min_n, opt.max_n)(rng);
        auto inst = mis::generate(cls, n, mis::UniformThresholds{}, rng());
        inst.lambda = std::uniform_int_distribution<std::int64_t>(0, opt.max_lambda)(rng);
        inst.beta = std::uniform_int_distribution<std::int64_t>(0, opt.max_beta)(rng);

        const auto sol = mis::solve(inst, kind);
        const auto oracle = mis::solve_bruteforce(inst);
        const bool consistent = sol.seeds.size() <= mis::effective_budget(inst) &&
                                mis::influenced_count(inst, sol.seeds) == sol.influenced_count;
        if (sol.influenced_count == oracle.influenced_count && consistent) {
            ++ok;
            continue;
        }
        std::cerr << "mismatch on instance " << i << ": solver " << sol.influenced_count << ", oracle "
                  << oracle.influenced_count << (consistent ? "" : ", seeds inconsistent") << '\n'
                  << mis::format_instance({inst, "verify-" + std::to_string(i)});
    }
    std::cout << ok << '/' << opt.count << (ok == opt.count ? " OK" : " mismatches found") << '\n';
    return ok == opt.count ? kExitOk : kExitMismatch;
}

int cmd_generate(const GenerateOptions& opt) {
    mis::InstanceFile file;
    file.instance = mis::generate(mis::parse_graph_class(opt.cls), opt.n, mis::parse_threshold_policy(opt.thresholds),
                                  opt.rng_seed);
    file.instance.lambda = opt.lambda;
    file.instance.beta = opt.beta;
    if (!opt.name.empty()) file.name = opt.name;
    if (opt.out.empty())
        std::cout << mis::format_instance(file);
    else
        mis::write_instance(opt.out, file);
    return kExitOk;
}

int cmd_bench(const std::string& suite_name, int repeats) {
    const auto result = mis::run_bench(mis::parse_bench_suite(suite_name), repeats);
    std::cout << "suite " << to_string(result.suite) << "  solver " << to_string(result.solver) << "  lambda "
              << result.lambda << "  beta " << result.beta << '\n';
    std::cout << std::setw(10) << "n" << std::setw(12) << "value" << std::setw(12) << "ms" << std::setw(10) << "ratio"
              << '\n';
    const auto ratios = result.ratios();
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const auto& p = result.points[i];
        std::cout << std::setw(10) << p.n << std::setw(12) << p.value << std::setw(12) << std::fixed
                  << std::setprecision(2) << p.ms;
        if (i > 0) std::cout << std::setw(10) << ratios[i - 1];
        std::cout << '\n';
    }
    std::cout << "fitted exponent " << std::setprecision(3) << result.exponent() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (lambda, beta) influence maximization on trees, paths, cycles and cliques"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--instance", solve_opt.instance, "Instance file")->required()->check(CLI::ExistingFile);
    solve->add_option("--solver", solve_opt.solver, "Solver")
        ->check(CLI::IsMember({"auto", "tree", "path", "cycle", "complete", "bruteforce"}));
    solve->add_flag("--trace", solve_opt.trace, "Include the nodes activated in each round");
    solve->add_option("--output", solve_opt.output, "Report format")->check(CLI::IsMember({"json", "text"}));

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Compare a class solver with the brute-force oracle");
    verify->add_option("--class", verify_opt.cls, "Graph class")
        ->required()
        ->check(CLI::IsMember({"tree", "path", "cycle", "complete"}));
    verify->add_option("--count", verify_opt.count, "Number of random instances");
    verify->add_option("--max-n", verify_opt.max_n, "Largest instance size")
        ->check(CLI::Range(std::size_t{1}, mis::kDefaultOracleSizeLimit));
    verify->add_option("--max-lambda", verify_opt.max_lambda, "Largest lambda")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-beta", verify_opt.max_beta, "Largest beta")->check(CLI::NonNegativeNumber);
    verify->add_option("--rng-seed", verify_opt.rng_seed, "Random seed");

    GenerateOptions gen_opt;
    auto* gen = app.add_subcommand("generate", "Write a random instance file");
    gen->add_option("--class", gen_opt.cls, "Graph class")
        ->required()
        ->check(CLI::IsMember({"tree", "path", "cycle", "complete"}));
    gen->add_option("--n", gen_opt.n, "Number of nodes")->required();
    gen->add_option("--thresholds", gen_opt.thresholds, "uniform, const:K or custom:a,b,...");
    gen->add_option("--lambda", gen_opt.lambda, "Rounds")->check(CLI::NonNegativeNumber);
    gen->add_option("--beta", gen_opt.beta, "Budget")->check(CLI::NonNegativeNumber);
    gen->add_option("--rng-seed", gen_opt.rng_seed, "Random seed");
    gen->add_option("--out", gen_opt.out, "Output path (default: standard output)");
    gen->add_option("--name", gen_opt.name, "Instance name");

    std::string suite;
    int repeats = 3;
    auto* bench = app.add_subcommand("bench", "Time a fixed scaling suite");
    bench->add_option("--suite", suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"path-large", "tree-large", "complete-large"}));
    bench->add_option("--repeats", repeats, "Timed runs per size; the fastest counts")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*solve) return cmd_solve(solve_opt);
        if (*verify) return cmd_verify(verify_opt);
        if (*gen) return cmd_generate(gen_opt);
        if (*bench) return cmd_bench(suite, repeats);
    } catch (const mis::ClassMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitClass;
    } catch (const mis::OracleSizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOracle;
    } catch (const mis::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
