#include "gluedtrees/estimate.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/beta.hpp>

namespace gluedtrees {

namespace {

constexpr double kZ99 = 2.3263478740408408;  // Phi^{-1}(0.99)

int thread_count(const Exec& exec) {
    if (!exec.parallel) return 1;
    return exec.threads > 0 ? exec.threads : omp_get_max_threads();
}

}  // namespace

double clopper_pearson_upper(std::uint64_t successes, std::uint64_t trials, double alpha) {
    if (trials == 0) return 1.0;
    if (successes >= trials) return 1.0;
    const boost::math::beta_distribution<double> dist(double(successes) + 1.0,
                                                      double(trials - successes));
    return boost::math::quantile(dist, 1.0 - alpha);
}

double wald_stderr(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return 0.0;
    const double p = double(successes) / double(trials);
    return std::sqrt(p * (1.0 - p) / double(trials));
}

Estimate binomial_estimate(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed) {
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    e.mean = trials == 0 ? 0.0 : double(successes) / double(trials);
    e.std_error = wald_stderr(successes, trials);
    e.ci99_upper = clopper_pearson_upper(successes, trials);
    e.seed = seed;
    return e;
}

Estimate estimate_win_probability(const GluedTreesGraph& g, const RootedTree& tree,
                                  std::uint64_t trials, std::uint64_t master_seed, Exec exec) {
    validate_tree(tree);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::uint64_t successes = 0;
    if (exec.parallel) {
#pragma omp parallel num_threads(thread_count(exec)) reduction(+ : successes)
        {
            GameScratch scratch;
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < std::int64_t(trials); ++i) {
                rng::Stream s(rng::derive(master_seed, std::uint64_t(i)));
                if (play_game(g, tree, s, scratch).won) ++successes;
            }
        }
    } else {
        GameScratch scratch;
        for (std::uint64_t i = 0; i < trials; ++i) {
            rng::Stream s(rng::derive(master_seed, i));
            if (play_game(g, tree, s, scratch).won) ++successes;
        }
    }

    Estimate e = binomial_estimate(trials, successes, master_seed);
    e.parameters = {{"op", "estimate_win_probability"},
                    {"n", g.n()},
                    {"graph_seed", g.seed()},
                    {"t", tree.size()}};
    return e;
}

namespace {

// successes per graph for the two-level design; deterministic per index
std::vector<std::uint64_t> per_graph_successes(int n, const RootedTree& tree,
                                               std::uint64_t graph_trials,
                                               std::uint64_t embed_trials,
                                               std::uint64_t master_seed, Exec exec,
                                               GraphLimits limits) {
    std::vector<std::uint64_t> wins(graph_trials, 0);
    const std::uint64_t graphs_key = rng::derive(master_seed, rng::tag::graphs);
    const std::uint64_t embeds_key = rng::derive(master_seed, rng::tag::embeds);

    const auto run_graph = [&](std::uint64_t i, GameScratch& scratch) {
        const GluedTreesGraph g = build_graph(n, rng::derive(graphs_key, i), limits);
        const std::uint64_t graph_embed_key = rng::derive(embeds_key, i);
        std::uint64_t s = 0;
        for (std::uint64_t j = 0; j < embed_trials; ++j) {
            rng::Stream stream(rng::derive(graph_embed_key, j));
            if (play_game(g, tree, stream, scratch).won) ++s;
        }
        wins[i] = s;
    };

    if (exec.parallel) {
#pragma omp parallel num_threads(thread_count(exec))
        {
            GameScratch scratch;
#pragma omp for schedule(dynamic)
            for (std::int64_t i = 0; i < std::int64_t(graph_trials); ++i)
                run_graph(std::uint64_t(i), scratch);
        }
    } else {
        GameScratch scratch;
        for (std::uint64_t i = 0; i < graph_trials; ++i) run_graph(i, scratch);
    }
    return wins;
}

double clustered_stderr(const std::vector<std::uint64_t>& wins, std::uint64_t embed_trials) {
    const std::size_t groups = wins.size();
    if (groups < 2) return 0.0;
    double mean = 0.0;
    for (const std::uint64_t w : wins) mean += double(w) / double(embed_trials);
    mean /= double(groups);
    double ss = 0.0;
    for (const std::uint64_t w : wins) {
        const double d = double(w) / double(embed_trials) - mean;
        ss += d * d;
    }
    return std::sqrt(ss / (double(groups) * double(groups - 1)));
}

}  // namespace

Estimate estimate_expected_win(int n, const RootedTree& tree, std::uint64_t graph_trials,
                               std::uint64_t embed_trials_per_graph, std::uint64_t master_seed,
                               Exec exec, GraphLimits limits) {
    validate_tree(tree);
    if (graph_trials < 1 || embed_trials_per_graph < 1)
        throw std::invalid_argument("budgets must be >= 1");

    const std::vector<std::uint64_t> wins =
        per_graph_successes(n, tree, graph_trials, embed_trials_per_graph, master_seed, exec, limits);

    std::uint64_t successes = 0;
    for (const std::uint64_t w : wins) successes += w;
    const std::uint64_t trials = graph_trials * embed_trials_per_graph;

    Estimate e = binomial_estimate(trials, successes, master_seed);
    if (graph_trials >= 2) {
        e.std_error = clustered_stderr(wins, embed_trials_per_graph);
        e.ci99_upper = std::max(e.ci99_upper, e.mean + kZ99 * e.std_error);
    }
    e.parameters = {{"op", "estimate_expected_win"},
                    {"n", n},
                    {"t", tree.size()},
                    {"graph_trials", graph_trials},
                    {"embed_trials_per_graph", embed_trials_per_graph}};
    return e;
}

PairAudit improper_pair_frequency(int n, const RootedTree& tree, std::uint64_t graph_trials,
                                  std::uint64_t embed_trials, std::uint64_t master_seed, Exec exec,
                                  GraphLimits limits) {
    validate_tree(tree);
    if (graph_trials < 1 || embed_trials < 1) throw std::invalid_argument("budgets must be >= 1");
    const int t = tree.size();

    std::vector<std::pair<int, int>> keys;
    for (int a = 1; a < t; ++a)
        for (int b = a + 1; b < t; ++b) keys.emplace_back(a, b);
    const std::size_t pair_count = keys.size();

    // per-graph rows of pair counts plus one improper count
    std::vector<std::uint64_t> counts(graph_trials * (pair_count + 1), 0);
    const std::uint64_t graphs_key = rng::derive(master_seed, rng::tag::graphs);
    const std::uint64_t embeds_key = rng::derive(master_seed, rng::tag::embeds);

    const auto run_graph = [&](std::uint64_t i, GameScratch& scratch) {
        const GluedTreesGraph g = build_graph(n, rng::derive(graphs_key, i), limits);
        const std::uint64_t graph_embed_key = rng::derive(embeds_key, i);
        std::uint64_t* row = counts.data() + i * (pair_count + 1);
        for (std::uint64_t j = 0; j < embed_trials; ++j) {
            rng::Stream stream(rng::derive(graph_embed_key, j));
            sample_embedding_into(g, tree, stream, scratch.image);
            for (std::size_t k = 0; k < pair_count; ++k) {
                const auto [a, b] = keys[k];
                if (scratch.image[a] == scratch.image[b] &&
                    scratch.image[tree.parent[a]] != scratch.image[tree.parent[b]])
                    ++row[k];
            }
            if (is_improper_buf(tree, scratch.image, scratch.pairs)) ++row[pair_count];
        }
    };

    if (exec.parallel) {
#pragma omp parallel num_threads(thread_count(exec))
        {
            GameScratch scratch;
#pragma omp for schedule(dynamic)
            for (std::int64_t i = 0; i < std::int64_t(graph_trials); ++i)
                run_graph(std::uint64_t(i), scratch);
        }
    } else {
        GameScratch scratch;
        for (std::uint64_t i = 0; i < graph_trials; ++i) run_graph(i, scratch);
    }

    const std::uint64_t trials = graph_trials * embed_trials;
    PairAudit audit;
    audit.pairs.reserve(pair_count);
    for (std::size_t k = 0; k < pair_count; ++k) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < graph_trials; ++i) s += counts[i * (pair_count + 1) + k];
        Estimate e = binomial_estimate(trials, s, master_seed);
        e.parameters = {{"op", "improper_pair_frequency"},
                        {"n", n},
                        {"t", t},
                        {"a", keys[k].first},
                        {"b", keys[k].second}};
        audit.pairs.emplace_back(keys[k], std::move(e));
    }

    std::vector<std::uint64_t> improper_wins(graph_trials);
    std::uint64_t improper_total = 0;
    for (std::uint64_t i = 0; i < graph_trials; ++i) {
        improper_wins[i] = counts[i * (pair_count + 1) + pair_count];
        improper_total += improper_wins[i];
    }
    audit.improper = binomial_estimate(trials, improper_total, master_seed);
    if (graph_trials >= 2) {
        audit.improper.std_error = clustered_stderr(improper_wins, embed_trials);
        audit.improper.ci99_upper =
            std::max(audit.improper.ci99_upper, audit.improper.mean + kZ99 * audit.improper.std_error);
    }
    audit.improper.parameters = {{"op", "improper_frequency"}, {"n", n}, {"t", t}};
    return audit;
}

WorstTreeResult search_worst_tree(int n, int t, int candidates, std::uint64_t graph_trials,
                                  std::uint64_t embed_trials, std::uint64_t master_seed, Exec exec,
                                  GraphLimits limits) {
    if (candidates < 1) throw std::invalid_argument("need at least one candidate tree");
    const std::uint64_t trees_key = rng::derive(master_seed, rng::tag::trees);
    const std::uint64_t evals_key = rng::derive(master_seed, rng::tag::evals);

    WorstTreeResult best;
    bool have_best = false;
    for (int c = 0; c < candidates; ++c) {
        RootedTree tree;
        std::string label;
        switch (c) {
            case 0: tree = make_tree(TreeShape::Path, t); label = "path"; break;
            case 1: tree = make_tree(TreeShape::FullBinary, t); label = "full_binary"; break;
            case 2: tree = make_tree(TreeShape::Caterpillar, t); label = "caterpillar"; break;
            default:
                tree = make_tree(TreeShape::RandomAttach, t, rng::derive(trees_key, std::uint64_t(c)));
                label = "random_attach/" + std::to_string(c);
        }
        Estimate e = estimate_expected_win(n, tree, graph_trials, embed_trials,
                                           rng::derive(evals_key, std::uint64_t(c)), exec, limits);
        if (!have_best || e.mean > best.estimate.mean) {
            best = WorstTreeResult{std::move(tree), std::move(e), c, label};
            have_best = true;
        }
    }
    return best;
}

}  // namespace gluedtrees
