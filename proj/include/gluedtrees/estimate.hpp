// estimate.hpp — Monte Carlo estimators for the embedding game. Trials are
// embarrassingly parallel: every trial derives its own stream from the master
// seed and indices, and aggregation sums integer counts, so results do not
// depend on scheduling or worker count. Each estimator has a serial reference
// path (Exec{.parallel=false}) that the OpenMP path must match bit-for-bit.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gluedtrees/embedding.hpp"
#include "gluedtrees/graph.hpp"
#include "gluedtrees/tree.hpp"

namespace gluedtrees {

struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double mean = 0.0;
    double std_error = 0.0;   // Wald, or clustered for two-level designs
    double ci99_upper = 0.0;  // one-sided 99% upper confidence bound
    std::uint64_t seed = 0;
    nlohmann::json parameters = nlohmann::json::object();
};

// exact binomial (Clopper-Pearson) one-sided upper bound
double clopper_pearson_upper(std::uint64_t successes, std::uint64_t trials, double alpha = 0.01);
double wald_stderr(std::uint64_t successes, std::uint64_t trials);

Estimate binomial_estimate(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed);

struct Exec {
    bool parallel = true;
    int threads = 0;  // 0 = runtime default
};

// P^G(T) on a fixed graph; per-trial stream key derive(master_seed, trial)
Estimate estimate_win_probability(const GluedTreesGraph& g, const RootedTree& tree,
                                  std::uint64_t trials, std::uint64_t master_seed, Exec exec = {});

// E_G[P^G(T)]: graph i from derive(derive(master, tag::graphs), i), embedding
// (i, j) from derive(derive(derive(master, tag::embeds), i), j). std_error is
// the clustered (between-graph) standard error; ci99_upper is the larger of
// the pooled Clopper-Pearson bound and the normal bound at the clustered SE.
Estimate estimate_expected_win(int n, const RootedTree& tree, std::uint64_t graph_trials,
                               std::uint64_t embed_trials_per_graph, std::uint64_t master_seed,
                               Exec exec = {}, GraphLimits limits = GraphLimits::from_env());

struct PairAudit {
    // per unordered pair (a, b) of non-root nodes, the frequency of
    // image[a] == image[b] with differing parent images
    std::vector<std::pair<std::pair<int, int>, Estimate>> pairs;
    Estimate improper;  // overall improper frequency over the same samples
};

PairAudit improper_pair_frequency(int n, const RootedTree& tree, std::uint64_t graph_trials,
                                  std::uint64_t embed_trials, std::uint64_t master_seed,
                                  Exec exec = {}, GraphLimits limits = GraphLimits::from_env());

struct WorstTreeResult {
    RootedTree tree;
    Estimate estimate;
    int candidate_index = 0;
    std::string label;
};

// empirical maximizer of estimate_expected_win over generated candidates; a
// lower bound on the true max over all trees
WorstTreeResult search_worst_tree(int n, int t, int candidates, std::uint64_t graph_trials,
                                  std::uint64_t embed_trials, std::uint64_t master_seed,
                                  Exec exec = {}, GraphLimits limits = GraphLimits::from_env());

}  // namespace gluedtrees
