// harness.hpp — adaptive classical strategies played against the oracle.
// Strategies observe nothing but names and responses: they start from the
// advertised entrance name and recognize the EXIT as any 2-neighbor response
// for a different name. Every episode gets a fresh oracle, so success counts
// are binomial over the random-instance distribution.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gluedtrees/estimate.hpp"
#include "gluedtrees/oracle.hpp"
#include "gluedtrees/rng.hpp"

namespace gluedtrees {

struct Transcript {
    std::vector<std::pair<VertexName, OracleResponse>> entries;
};

struct EpisodeResult {
    bool found_exit = false;
    std::uint64_t queries_used = 0;
    std::string strategy_id;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string_view id() const = 0;
    virtual void reset(VertexName entrance) = 0;
    // next name to query; drawing from `stream` is the only allowed randomness
    virtual VertexName propose(rng::Stream& stream) = 0;
    virtual void observe(VertexName queried, const OracleResponse& response) = 0;
};

// uniform_walk, nonbacktracking_walk, random_dfs, sprinter (ids are stable)
std::vector<std::string> builtin_strategies();
std::unique_ptr<Strategy> make_strategy(std::string_view id);

EpisodeResult run_episode(Oracle& oracle, Strategy& strategy, std::uint64_t budget,
                          rng::Stream& stream, Transcript* transcript = nullptr);

// fresh oracle per episode; graph, naming, and strategy streams all derive
// from (master_seed, episode index)
Estimate success_rate(int n, std::string_view strategy_id, std::uint64_t budget,
                      std::uint64_t episodes, std::uint64_t master_seed, Exec exec = {},
                      GraphLimits limits = GraphLimits::from_env());

}  // namespace gluedtrees
