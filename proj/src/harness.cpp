#include "gluedtrees/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gluedtrees {

namespace {

int thread_count(const Exec& exec) {
    if (!exec.parallel) return 1;
    return exec.threads > 0 ? exec.threads : omp_get_max_threads();
}

VertexName pick(std::span<const VertexName> names, rng::Stream& s) {
    return names[s.next_below(names.size())];
}

// random walk on names; nonbacktracking avoids the previous position when it can
class WalkStrategy final : public Strategy {
public:
    explicit WalkStrategy(bool nonbacktracking) : nonbacktracking_(nonbacktracking) {}

    std::string_view id() const override {
        return nonbacktracking_ ? "nonbacktracking_walk" : "uniform_walk";
    }

    void reset(VertexName entrance) override {
        cur_ = entrance;
        prev_ = VertexName{};
        have_prev_ = false;
        started_ = false;
        last_ = {};
    }

    VertexName propose(rng::Stream& s) override {
        if (!started_) {
            started_ = true;
            return cur_;
        }
        VertexName next;
        if (nonbacktracking_ && have_prev_) {
            candidates_.clear();
            for (const VertexName nm : last_.list())
                if (nm != prev_) candidates_.push_back(nm);
            next = candidates_.empty() ? pick(last_.list(), s)
                                       : candidates_[s.next_below(candidates_.size())];
        } else {
            next = pick(last_.list(), s);
        }
        prev_ = cur_;
        have_prev_ = true;
        cur_ = next;
        return cur_;
    }

    void observe(VertexName, const OracleResponse& resp) override {
        if (resp.valid()) last_ = resp;
    }

private:
    bool nonbacktracking_;
    VertexName cur_{}, prev_{};
    bool have_prev_ = false, started_ = false;
    OracleResponse last_;
    std::vector<VertexName> candidates_;
};

// depth-first search over the discovered frontier, children in random order
class RandomDfsStrategy final : public Strategy {
public:
    std::string_view id() const override { return "random_dfs"; }

    void reset(VertexName entrance) override {
        entrance_ = entrance;
        stack_.assign(1, entrance);
        queried_.clear();
        pending_ = {};
    }

    VertexName propose(rng::Stream& s) override {
        if (pending_.valid()) {
            fresh_.clear();
            for (const VertexName nm : pending_.list())
                if (!queried_.count(nm)) fresh_.push_back(nm);
            for (std::size_t i = fresh_.size(); i > 1; --i)
                std::swap(fresh_[i - 1], fresh_[s.next_below(i)]);
            stack_.insert(stack_.end(), fresh_.begin(), fresh_.end());
            pending_ = {};
        }
        while (!stack_.empty() && queried_.count(stack_.back())) stack_.pop_back();
        if (stack_.empty()) return entrance_;  // graph exhausted
        const VertexName next = stack_.back();
        stack_.pop_back();
        queried_.insert(next);
        return next;
    }

    void observe(VertexName, const OracleResponse& resp) override {
        if (resp.valid()) pending_ = resp;
    }

private:
    VertexName entrance_{};
    std::vector<VertexName> stack_;
    std::unordered_set<VertexName> queried_;
    OracleResponse pending_;
    std::vector<VertexName> fresh_;
};

// walk that moves to an unqueried neighbor whenever one exists
class SprinterStrategy final : public Strategy {
public:
    std::string_view id() const override { return "sprinter"; }

    void reset(VertexName entrance) override {
        cur_ = entrance;
        prev_ = VertexName{};
        have_prev_ = false;
        started_ = false;
        last_ = {};
        queried_.clear();
    }

    VertexName propose(rng::Stream& s) override {
        if (!started_) {
            started_ = true;
            queried_.insert(cur_);
            return cur_;
        }
        candidates_.clear();
        for (const VertexName nm : last_.list())
            if (!queried_.count(nm)) candidates_.push_back(nm);
        if (candidates_.empty()) {
            for (const VertexName nm : last_.list())
                if (!have_prev_ || nm != prev_) candidates_.push_back(nm);
            if (candidates_.empty())
                for (const VertexName nm : last_.list()) candidates_.push_back(nm);
        }
        const VertexName next = candidates_[s.next_below(candidates_.size())];
        prev_ = cur_;
        have_prev_ = true;
        cur_ = next;
        queried_.insert(next);
        return cur_;
    }

    void observe(VertexName, const OracleResponse& resp) override {
        if (resp.valid()) last_ = resp;
    }

private:
    VertexName cur_{}, prev_{};
    bool have_prev_ = false, started_ = false;
    OracleResponse last_;
    std::unordered_set<VertexName> queried_;
    std::vector<VertexName> candidates_;
};

}  // namespace

std::vector<std::string> builtin_strategies() {
    return {"uniform_walk", "nonbacktracking_walk", "random_dfs", "sprinter"};
}

std::unique_ptr<Strategy> make_strategy(std::string_view id) {
    if (id == "uniform_walk") return std::make_unique<WalkStrategy>(false);
    if (id == "nonbacktracking_walk") return std::make_unique<WalkStrategy>(true);
    if (id == "random_dfs") return std::make_unique<RandomDfsStrategy>();
    if (id == "sprinter") return std::make_unique<SprinterStrategy>();
    throw std::invalid_argument("unknown strategy id: " + std::string(id));
}

EpisodeResult run_episode(Oracle& oracle, Strategy& strategy, std::uint64_t budget,
                          rng::Stream& stream, Transcript* transcript) {
    EpisodeResult result;
    result.strategy_id = std::string(strategy.id());
    const VertexName entrance = oracle.entrance_name();
    strategy.reset(entrance);
    for (std::uint64_t q = 0; q < budget; ++q) {
        const VertexName name = strategy.propose(stream);
        const OracleResponse resp = oracle.query(name);
        ++result.queries_used;
        if (transcript) transcript->entries.emplace_back(name, resp);
        strategy.observe(name, resp);
        if (resp.valid() && resp.degree == 2 && name != entrance) {
            result.found_exit = true;
            break;
        }
    }
    return result;
}

Estimate success_rate(int n, std::string_view strategy_id, std::uint64_t budget,
                      std::uint64_t episodes, std::uint64_t master_seed, Exec exec,
                      GraphLimits limits) {
    if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
    make_strategy(strategy_id);  // reject unknown ids up front
    const std::uint64_t graph_key = rng::derive(master_seed, rng::tag::episode_graph);
    const std::uint64_t names_key = rng::derive(master_seed, rng::tag::episode_names);
    const std::uint64_t strat_key = rng::derive(master_seed, rng::tag::episode_strategy);

    const auto run_one = [&](std::uint64_t i, Strategy& strategy) -> bool {
        const auto graph = std::make_shared<const GluedTreesGraph>(
            build_graph(n, rng::derive(graph_key, i), limits));
        Oracle oracle(graph, rng::derive(names_key, i));
        rng::Stream stream(rng::derive(strat_key, i));
        return run_episode(oracle, strategy, budget, stream).found_exit;
    };

    std::uint64_t successes = 0;
    if (exec.parallel) {
#pragma omp parallel num_threads(thread_count(exec)) reduction(+ : successes)
        {
            const auto strategy = make_strategy(strategy_id);
#pragma omp for schedule(dynamic)
            for (std::int64_t i = 0; i < std::int64_t(episodes); ++i)
                if (run_one(std::uint64_t(i), *strategy)) ++successes;
        }
    } else {
        const auto strategy = make_strategy(strategy_id);
        for (std::uint64_t i = 0; i < episodes; ++i)
            if (run_one(i, *strategy)) ++successes;
    }

    Estimate e = binomial_estimate(episodes, successes, master_seed);
    e.parameters = {{"op", "success_rate"},
                    {"n", n},
                    {"strategy_id", std::string(strategy_id)},
                    {"budget", budget},
                    {"episodes", episodes}};
    return e;
}

}  // namespace gluedtrees
