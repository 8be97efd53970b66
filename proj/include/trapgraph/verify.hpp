#pragma once
#include <cstdint>
#include <ostream>
#include <string>

namespace trapgraph {

// Randomized cross-validation campaign: for every trial, a diagram is built
// from mix_seed(base, n, trial) and every fast algorithm's output is compared
// against the brute-force oracle. Each failure names its (n, trial, seed)
// triple and embeds the diagram, so it reproduces standalone.
struct CampaignResult {
    bool ok = true;
    long long trials_run = 0;
    std::string failure; // empty when ok
};

struct CampaignOptions {
    int trials = 1000;   // per n
    int max_n = 12;      // n ranges 1..max_n
    std::uint64_t seed = 0;
    bool check_matching = true; // greedy sanity where the exact matcher is cheap
};

CampaignResult run_campaign(const CampaignOptions& options, std::ostream* progress = nullptr);

} // namespace trapgraph
