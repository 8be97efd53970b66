// trapgraph: generate, analyze, audit, verify, and benchmark trapezoid
// diagrams. Exit codes: 0 success, 1 validation/parse error, 2 verification
// mismatch, 3 size limit exceeded.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trapgraph/cover.hpp"
#include "trapgraph/diagram.hpp"
#include "trapgraph/errors.hpp"
#include "trapgraph/independence.hpp"
#include "trapgraph/matching.hpp"
#include "trapgraph/oracle.hpp"
#include "trapgraph/trap_io.hpp"
#include "trapgraph/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitSizeLimit = 3;

double time_once(const auto& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

double median_ms(int repeats, const auto& fn) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r) times.push_back(time_once(fn));
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

void print_edges(std::ostream& out, const trapgraph::Matching& m) {
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        out << (i ? " " : "") << '(' << m.edges[i].first << ',' << m.edges[i].second << ')';
    out << '\n';
}

int run(int argc, char** argv) {
    using namespace trapgraph;
    CLI::App app{"binary-indexed-tree algorithms on trapezoid diagrams"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "write a random diagram as .trap");
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("n", gen_n, "number of trapezoids")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("out,--out", gen_out, "output path")->required();

    auto* analyze = app.add_subcommand("analyze", "independence / cover report for a .trap file");
    std::string analyze_in;
    bool analyze_poly = false, analyze_witness = false;
    analyze->add_option("in", analyze_in, "input .trap path")->required();
    analyze->add_flag("--polynomial", analyze_poly, "include independence polynomial coefficients");
    analyze->add_flag("--witness", analyze_witness, "include witness sets");

    auto* matching = app.add_subcommand("matching", "greedy matching, optionally audited");
    std::string matching_in;
    bool matching_audit = false;
    matching->add_option("in", matching_in, "input .trap path")->required();
    matching->add_flag("--audit", matching_audit, "compare against the exact matcher");

    auto* counter = app.add_subcommand("counterexample", "write the greedy-refuting family member k");
    int counter_k = 0;
    std::string counter_out;
    counter->add_option("k", counter_k, "family index")->required()->check(CLI::NonNegativeNumber);
    counter->add_option("out,--out", counter_out, "output path")->required();

    auto* verify = app.add_subcommand("verify", "cross-validate fast algorithms against the oracle");
    CampaignOptions campaign;
    bool inject_fault = false;
    verify->add_option("--trials", campaign.trials, "trials per n")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", campaign.max_n, "largest diagram size")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", campaign.seed, "campaign base seed");
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test hook, hidden

    auto* bench = app.add_subcommand("bench", "time the sweep against the quadratic baseline");
    std::vector<int> bench_sizes;
    std::string bench_algo = "both";
    int bench_repeats = 5;
    std::uint64_t bench_seed = 0;
    bench->add_option("--sizes", bench_sizes, "diagram sizes")->required()->delimiter(',');
    bench->add_option("--algo", bench_algo, "sweep, quadratic, or both")
        ->check(CLI::IsMember({"sweep", "quadratic", "both"}));
    bench->add_option("--repeats", bench_repeats, "runs per measurement (median reported)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (gen->parsed()) {
        const TrapezoidDiagram d = random_diagram(gen_n, gen_seed);
        validate(d);
        save_trap_file(d, gen_out);
        return kExitOk;
    }

    if (analyze->parsed()) {
        const TrapezoidDiagram d = load_trap_file(analyze_in);
        validate(d);
        const AugmentedDiagram aug = augment(d);
        std::cout << "n: " << d.n() << '\n';
        std::cout << "alpha: " << max_is_size(aug) << '\n';
        std::cout << "num_max_is: " << to_decimal(count_max_independent_sets(aug)) << '\n';
        std::cout << "num_is: " << to_decimal(count_independent_sets(aug)) << '\n';
        const CoverReport cover = cover_report(aug);
        std::cout << "min_vc_size: " << cover.min_vc_size << '\n';
        std::cout << "num_min_vc: " << to_decimal(cover.num_min_vc) << '\n';
        std::cout << "num_vc: " << to_decimal(cover.num_vc) << '\n';
        if (analyze_poly) {
            const IndependencePolynomial poly = independence_polynomial(aug);
            std::cout << "polynomial:";
            for (const BigCount& s : poly.coefficients) std::cout << ' ' << to_decimal(s);
            std::cout << '\n';
        }
        if (analyze_witness) {
            std::cout << "max_is_witness:";
            for (int i : max_is_witness(aug)) std::cout << ' ' << i;
            std::cout << '\n';
            std::cout << "min_vc_witness:";
            for (int i : cover.witness) std::cout << ' ' << i;
            std::cout << '\n';
        }
        return kExitOk;
    }

    if (matching->parsed()) {
        const TrapezoidDiagram d = load_trap_file(matching_in);
        validate(d);
        const Matching greedy = ghosh_pal_matching(d);
        std::cout << "n: " << d.n() << '\n';
        std::cout << "greedy_cardinality: " << greedy.cardinality() << '\n';
        std::cout << "greedy_edges:";
        if (!greedy.edges.empty()) std::cout << ' ';
        print_edges(std::cout, greedy);
        if (matching_audit) {
            const AuditReport report = audit(d);
            std::cout << "exact_cardinality: " << report.exact.cardinality() << '\n';
            std::cout << "exact_edges:";
            if (!report.exact.edges.empty()) std::cout << ' ';
            print_edges(std::cout, report.exact);
            std::cout << "gap: " << report.gap << '\n';
        }
        return kExitOk;
    }

    if (counter->parsed()) {
        const TrapezoidDiagram d = counterexample(counter_k);
        validate(d);
        save_trap_file(d, counter_out);
        return kExitOk;
    }

    if (verify->parsed()) {
        testhooks::inject_fault = inject_fault;
        const CampaignResult result = run_campaign(campaign, &std::cout);
        if (!result.ok) {
            std::cout << result.failure << '\n';
            return kExitMismatch;
        }
        std::cout << "verified " << result.trials_run << " trials across n=1.." << campaign.max_n
                  << ": all algorithms agree with the oracle\n";
        return kExitOk;
    }

    if (bench->parsed()) {
        std::cout << "algo\tn\talpha\tmedian_ms\truns\n";
        for (const int n : bench_sizes) {
            const TrapezoidDiagram d = random_diagram(n, bench_seed);
            const AugmentedDiagram aug = augment(d);
            if (bench_algo != "quadratic") {
                volatile int alpha_sink = 0;
                const double ms = median_ms(bench_repeats, [&] { alpha_sink = max_is_size(aug); });
                std::cout << "sweep\t" << n << '\t' << alpha_sink << '\t' << ms << '\t' << bench_repeats << '\n';
            }
            if (bench_algo != "sweep") {
                volatile int alpha_sink = 0;
                const double ms = median_ms(bench_repeats, [&] { alpha_sink = max_is_quadratic(aug); });
                std::cout << "quadratic\t" << n << '\t' << alpha_sink << '\t' << ms << '\t' << bench_repeats << '\n';
            }
        }
        return kExitOk;
    }

    return kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const trapgraph::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return kExitSizeLimit;
    } catch (const trapgraph::ValidationError& e) {
        std::cerr << "invalid diagram: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const trapgraph::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
