#include "trapgraph/verify.hpp"

#include <sstream>

#include "trapgraph/cover.hpp"
#include "trapgraph/diagram.hpp"
#include "trapgraph/independence.hpp"
#include "trapgraph/matching.hpp"
#include "trapgraph/oracle.hpp"
#include "trapgraph/rng.hpp"
#include "trapgraph/trap_io.hpp"

namespace trapgraph {
namespace {

// Matching sanity is limited to sizes where branch and bound is instant.
constexpr int kMatchingCheckMaxN = 14;

std::string describe_failure(const TrapezoidDiagram& d, int n, int trial, std::uint64_t seed,
                             const std::string& what) {
    std::ostringstream out;
    out << "mismatch at n=" << n << " trial=" << trial << " derived seed=" << seed << ": " << what << '\n'
        << "diagram:\n"
        << serialize_trap(d) << "reproduce: trapgraph gen " << n << " --seed " << seed
        << " --out bad.trap && trapgraph analyze bad.trap";
    return out.str();
}

} // namespace

CampaignResult run_campaign(const CampaignOptions& options, std::ostream* progress) {
    CampaignResult result;
    for (int n = 1; n <= options.max_n; ++n) {
        for (int trial = 0; trial < options.trials; ++trial) {
            const std::uint64_t seed = mix_seed(options.seed, static_cast<std::uint64_t>(n),
                                                static_cast<std::uint64_t>(trial));
            const TrapezoidDiagram d = random_diagram(n, seed);
            validate(d);
            const AugmentedDiagram aug = augment(d);
            const EnumerationResult oracle = brute_enumerate(to_graph(d));
            ++result.trials_run;

            auto fail = [&](const std::string& what) {
                result.ok = false;
                result.failure = describe_failure(d, n, trial, seed, what);
            };

            // independence sweeps vs oracle
            const int alpha = max_is_size(aug);
            if (alpha != oracle.alpha) {
                fail("alpha " + std::to_string(alpha) + " != oracle " + std::to_string(oracle.alpha));
                return result;
            }
            BigCount num_is_expected = 0;
            for (std::size_t k = 1; k < oracle.per_size_counts.size(); ++k)
                num_is_expected += oracle.per_size_counts[k];
            const BigCount num_is = count_independent_sets(aug);
            if (num_is != num_is_expected) {
                fail("num_is " + to_decimal(num_is) + " != oracle " + to_decimal(num_is_expected));
                return result;
            }
            const BigCount num_max = count_max_independent_sets(aug);
            if (num_max != oracle.max_is_count) {
                fail("num_max_is " + to_decimal(num_max) + " != oracle " + to_decimal(oracle.max_is_count));
                return result;
            }
            const IndependencePolynomial poly = independence_polynomial(aug);
            if (poly.coefficients.size() != static_cast<std::size_t>(alpha) + 1) {
                fail("polynomial has " + std::to_string(poly.coefficients.size()) + " coefficients, want " +
                     std::to_string(alpha + 1));
                return result;
            }
            for (std::size_t k = 0; k < poly.coefficients.size(); ++k)
                if (poly.coefficients[k] != oracle.per_size_counts[k]) {
                    fail("s_" + std::to_string(k) + " = " + to_decimal(poly.coefficients[k]) +
                         " != oracle " + to_decimal(oracle.per_size_counts[k]));
                    return result;
                }

            // quadratic baselines agree with the sweeps
            if (max_is_quadratic(aug) != alpha) {
                fail("max_is_quadratic != sweep alpha");
                return result;
            }
            if (count_max_is_quadratic(aug) != num_max) {
                fail("count_max_is_quadratic != sweep count");
                return result;
            }

            // both reuse modes agree
            if (count_max_independent_sets(aug, LevelReuse::fresh_per_level) != num_max) {
                fail("fresh_per_level disagrees with targeted_reset");
                return result;
            }

            // witnesses
            const std::vector<int> wit = max_is_witness(aug);
            if (static_cast<int>(wit.size()) != alpha) {
                fail("witness size != alpha");
                return result;
            }
            for (std::size_t x = 0; x < wit.size(); ++x)
                for (std::size_t y = x + 1; y < wit.size(); ++y)
                    if (adjacent(d, wit[x], wit[y])) {
                        fail("witness not independent");
                        return result;
                    }

            // cover duals
            if (min_vertex_cover_size(aug) != oracle.min_vc_size) {
                fail("min_vc_size != oracle");
                return result;
            }
            if (count_minimum_vertex_covers(aug) != oracle.min_vc_count) {
                fail("num_min_vc != oracle");
                return result;
            }
            if (count_vertex_covers(aug) != oracle.vc_count) {
                fail("num_vc != oracle");
                return result;
            }
            const std::vector<int> cover = min_vertex_cover_witness(aug);
            std::vector<char> in_cover(static_cast<std::size_t>(n) + 1, 0);
            for (int v : cover) in_cover[static_cast<std::size_t>(v)] = 1;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (adjacent(d, i, j) && !in_cover[static_cast<std::size_t>(i)] &&
                        !in_cover[static_cast<std::size_t>(j)]) {
                        fail("cover witness misses edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
                        return result;
                    }

            // greedy matching sanity against the exact matcher
            if (options.check_matching && n <= kMatchingCheckMaxN) {
                const Matching greedy = ghosh_pal_matching(d);
                const Matching exact = brute_max_matching(to_graph(d));
                if (greedy.cardinality() > exact.cardinality()) {
                    fail("greedy matching exceeds exact maximum");
                    return result;
                }
                std::vector<char> matched(static_cast<std::size_t>(n) + 1, 0);
                for (auto [u, v] : greedy.edges) matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = 1;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (!matched[static_cast<std::size_t>(i)] && !matched[static_cast<std::size_t>(j)] &&
                            adjacent(d, i, j)) {
                            fail("greedy matching not maximal");
                            return result;
                        }
                if (n <= 3 && greedy.cardinality() != exact.cardinality()) {
                    fail("greedy must be optimal for n <= 3");
                    return result;
                }
            }
        }
        if (progress)
            (*progress) << "n=" << n << ": " << options.trials << " trials consistent\n";
    }
    return result;
}

} // namespace trapgraph
