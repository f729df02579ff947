#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gridminor/embed_faulty.hpp"

namespace gridminor {

/// Monte Carlo sweep description. Rates are percentages of failed vertices.
struct ExperimentConfig {
    int c = 4;
    std::vector<int> grids;                  // m values
    std::vector<double> rates;               // percent, in [0, 100]
    std::vector<FaultAlgorithm> algorithms = {FaultAlgorithm::Fallback,
                                              FaultAlgorithm::Greedy};
    std::vector<Scheme> schemes = {Scheme::Single, Scheme::FlipDrop};
    int trials = 1;
    uint64_t master_seed = 0;
    bool histograms = false;
    int threads = 0;  // 0: hardware concurrency
};

/// Flat key=value text, '#' comments. grids and rates are required;
/// everything else has defaults.
ExperimentConfig parse_config(const std::string& text);

struct Summary {
    double mean = 0.0;
    double variance = 0.0;  // population variance
    std::map<int, long> histogram;
};

Summary summarize(const std::vector<int>& samples);

struct CaseStats {
    int m = 0;
    int c = 0;
    double rate = 0.0;
    FaultAlgorithm algorithm = FaultAlgorithm::Greedy;
    Scheme scheme = Scheme::Single;
    long trials = 0;
    double mean = 0.0;
    double variance = 0.0;
    double pct_of_max = 0.0;  // 100 * mean / (cm+1)
    std::map<int, long> histogram;
};

/// Runs every (m, rate, algorithm, scheme) case. Trial seeds derive from
/// (master seed, m, c, rate, trial) only, so all algorithms and schemes see
/// the same fault sample of a trial and comparisons are paired. Identical
/// configs produce identical results regardless of thread count.
std::vector<CaseStats> run_trials(const ExperimentConfig& cfg);

uint64_t trial_seed(uint64_t master, int m, int c, double rate, int trial);

/// CSV: header `m,c,p,algorithm,scheme,trials,mean_n,var_n,pct_of_max`, one
/// data row per case, then optional `hist,...,n,count` rows.
std::string write_csv(const std::vector<CaseStats>& stats, bool histograms);

const char* algorithm_name(FaultAlgorithm a);  // "fallback" / "greedy"
const char* scheme_name(Scheme s);             // "single" / "flip-drop"

}  // namespace gridminor
