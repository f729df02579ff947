#include "gridminor/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridminor/graphio.hpp"
#include "gridminor/rng.hpp"

namespace gridminor {

const char* algorithm_name(FaultAlgorithm a) {
    return a == FaultAlgorithm::Fallback ? "fallback" : "greedy";
}

const char* scheme_name(Scheme s) { return s == Scheme::Single ? "single" : "flip-drop"; }

uint64_t trial_seed(uint64_t master, int m, int c, double rate, int trial) {
    return mix_seed({master, static_cast<uint64_t>(m), static_cast<uint64_t>(c),
                     static_cast<uint64_t>(std::llround(rate * 1e6)),
                     static_cast<uint64_t>(trial)});
}

Summary summarize(const std::vector<int>& samples) {
    if (samples.empty()) throw std::invalid_argument("summarize requires samples");
    Summary s;
    double sum = 0.0;
    for (int x : samples) {
        sum += x;
        ++s.histogram[x];
    }
    s.mean = sum / static_cast<double>(samples.size());
    double sq = 0.0;
    for (int x : samples) sq += (x - s.mean) * (x - s.mean);
    s.variance = sq / static_cast<double>(samples.size());
    return s;
}

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.c < 1) throw std::invalid_argument("config: c must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.grids.empty()) throw std::invalid_argument("config: grids is required");
    if (cfg.rates.empty()) throw std::invalid_argument("config: rates is required");
    if (cfg.algorithms.empty() || cfg.schemes.empty())
        throw std::invalid_argument("config: algorithms and schemes must be non-empty");
    for (int m : cfg.grids)
        if (m < 1) throw std::invalid_argument("config: grid sizes must be >= 1");
    for (double p : cfg.rates)
        if (!(p >= 0.0 && p <= 100.0))
            throw std::invalid_argument("config: rates must lie in [0, 100]");
}

// Runs fn(t) for t in [0, n) across worker threads; fn writes to
// preallocated slots, so the aggregation below is order-independent.
void parallel_trials(int n, int threads, const std::function<void(int)>& fn) {
    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int t = 0; t < n; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int t = w; t < n; t += workers) fn(t);
        });
    for (auto& th : pool) th.join();
}

std::string format_rate(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

std::string format_stat(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::vector<CaseStats> run_trials(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<CaseStats> out;
    size_t combos = cfg.algorithms.size() * cfg.schemes.size();
    for (int m : cfg.grids) {
        for (double rate : cfg.rates) {
            std::vector<std::vector<int>> samples(
                combos, std::vector<int>(static_cast<size_t>(cfg.trials)));
            parallel_trials(cfg.trials, cfg.threads, [&](int t) {
                Fabric fab = Fabric(m, cfg.c).with_random_faults(
                    rate / 100.0, trial_seed(cfg.master_seed, m, cfg.c, rate, t));
                size_t combo = 0;
                for (FaultAlgorithm alg : cfg.algorithms)
                    for (Scheme scheme : cfg.schemes) {
                        samples[combo][static_cast<size_t>(t)] =
                            orchestrate(fab, alg, scheme).order;
                        ++combo;
                    }
            });
            size_t combo = 0;
            for (FaultAlgorithm alg : cfg.algorithms)
                for (Scheme scheme : cfg.schemes) {
                    Summary s = summarize(samples[combo]);
                    CaseStats cs;
                    cs.m = m;
                    cs.c = cfg.c;
                    cs.rate = rate;
                    cs.algorithm = alg;
                    cs.scheme = scheme;
                    cs.trials = cfg.trials;
                    cs.mean = s.mean;
                    cs.variance = s.variance;
                    cs.pct_of_max = 100.0 * s.mean / (cfg.c * m + 1);
                    cs.histogram = std::move(s.histogram);
                    out.push_back(std::move(cs));
                    ++combo;
                }
        }
    }
    return out;
}

std::string write_csv(const std::vector<CaseStats>& stats, bool histograms) {
    std::string out = "m,c,p,algorithm,scheme,trials,mean_n,var_n,pct_of_max\n";
    for (const CaseStats& cs : stats) {
        out += std::to_string(cs.m) + "," + std::to_string(cs.c) + "," +
               format_rate(cs.rate) + "," + algorithm_name(cs.algorithm) + "," +
               scheme_name(cs.scheme) + "," + std::to_string(cs.trials) + "," +
               format_stat(cs.mean) + "," + format_stat(cs.variance) + "," +
               format_stat(cs.pct_of_max) + "\n";
    }
    if (histograms) {
        for (const CaseStats& cs : stats)
            for (auto [n, count] : cs.histogram)
                out += "hist," + std::to_string(cs.m) + "," + std::to_string(cs.c) + "," +
                       format_rate(cs.rate) + "," + algorithm_name(cs.algorithm) + "," +
                       scheme_name(cs.scheme) + "," + std::to_string(n) + "," +
                       std::to_string(count) + "\n";
    }
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    bool saw_grids = false, saw_rates = false;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto eq = raw.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = raw.substr(0, eq);
            value = raw.substr(eq + 1);
        } else {
            key = raw;
        }
        auto trim = [](std::string& s) {
            auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
        };
        trim(key);
        trim(value);
        if (key.empty() && value.empty()) continue;
        if (eq == std::string::npos) throw ParseError(number, "expected key = value");

        auto split_list = [&](const std::string& v) {
            std::vector<std::string> parts;
            std::string part;
            std::istringstream ps(v);
            while (std::getline(ps, part, ',')) {
                trim(part);
                if (part.empty()) throw ParseError(number, "empty list item");
                parts.push_back(part);
            }
            return parts;
        };
        auto to_int = [&](const std::string& v) {
            try {
                size_t used = 0;
                int x = std::stoi(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
                return x;
            } catch (const std::exception&) {
                throw ParseError(number, "bad integer '" + v + "'");
            }
        };
        auto to_double = [&](const std::string& v) {
            try {
                size_t used = 0;
                double x = std::stod(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
                return x;
            } catch (const std::exception&) {
                throw ParseError(number, "bad number '" + v + "'");
            }
        };

        if (key == "c") {
            cfg.c = to_int(value);
        } else if (key == "grids") {
            cfg.grids.clear();
            for (const auto& part : split_list(value)) cfg.grids.push_back(to_int(part));
            saw_grids = true;
        } else if (key == "rates") {
            cfg.rates.clear();
            for (const auto& part : split_list(value)) cfg.rates.push_back(to_double(part));
            saw_rates = true;
        } else if (key == "algorithms") {
            cfg.algorithms.clear();
            for (const auto& part : split_list(value)) {
                if (part == "fallback") cfg.algorithms.push_back(FaultAlgorithm::Fallback);
                else if (part == "greedy") cfg.algorithms.push_back(FaultAlgorithm::Greedy);
                else throw ParseError(number, "unknown algorithm '" + part + "'");
            }
        } else if (key == "schemes") {
            cfg.schemes.clear();
            for (const auto& part : split_list(value)) {
                if (part == "single") cfg.schemes.push_back(Scheme::Single);
                else if (part == "flip-drop") cfg.schemes.push_back(Scheme::FlipDrop);
                else throw ParseError(number, "unknown scheme '" + part + "'");
            }
        } else if (key == "trials") {
            cfg.trials = to_int(value);
        } else if (key == "seed") {
            try {
                cfg.master_seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ParseError(number, "bad seed '" + value + "'");
            }
        } else if (key == "histograms") {
            if (value == "true") cfg.histograms = true;
            else if (value == "false") cfg.histograms = false;
            else throw ParseError(number, "histograms must be true or false");
        } else if (key == "threads") {
            cfg.threads = to_int(value);
        } else {
            throw ParseError(number, "unknown key '" + key + "'");
        }
    }
    if (!saw_grids) throw ParseError(number + 1, "missing required key 'grids'");
    if (!saw_rates) throw ParseError(number + 1, "missing required key 'rates'");
    validate(cfg);
    return cfg;
}

}  // namespace gridminor
