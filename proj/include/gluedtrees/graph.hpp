// graph.hpp — glued-trees instance G: two complete binary trees of height n,
// ENTRANCE at level 0 and EXIT at level 2n+1, joined between levels n and n+1
// by a random cycle that alternates sides and covers every leaf. Tree edges
// are pure arithmetic on (level, index); only the cycle tables are stored.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gluedtrees/rng.hpp"

namespace gluedtrees {

// canonical vertex id: level-major order, offset(level) + index
using VertexId = std::uint64_t;

struct GraphLimits {
    std::uint64_t max_mem_mb = 2048;

    // GLUEDTREES_MAX_MEM_MB, default 2048
    static GraphLimits from_env();
};

class GluedTreesGraph {
public:
    static GluedTreesGraph build(int n, std::uint64_t seed, GraphLimits limits = GraphLimits::from_env());

    // reconstruct from a serialized middle cycle (interleaved leaf indices)
    static GluedTreesGraph from_cycle(int n, std::uint64_t seed,
                                      const std::vector<std::uint64_t>& interleaved,
                                      GraphLimits limits = GraphLimits::from_env());

    int n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t vertex_count() const { return (std::uint64_t(1) << (n_ + 2)) - 2; }
    std::uint64_t leaf_count() const { return std::uint64_t(1) << n_; }

    VertexId entrance() const { return 0; }
    VertexId exit() const { return vertex_count() - 1; }

    int level_of(VertexId v) const;
    // distance from v to the leaf level of its own tree
    int height_of(VertexId v) const;

    std::uint64_t level_offset(int level) const;
    std::uint64_t level_width(int level) const;
    VertexId vertex_at(int level, std::uint64_t index) const { return level_offset(level) + index; }
    std::uint64_t index_in_level(VertexId v) const { return v - level_offset(level_of(v)); }

    // fills `out` ascending; returns 2 for ENTRANCE/EXIT, 3 otherwise
    int neighbors(VertexId v, std::array<VertexId, 3>& out) const;

    // cycle as interleaved leaf indices [L0, R0, L1, R1, ...] in slot order
    std::vector<std::uint64_t> middle_cycle_interleaved() const;

    // estimated bytes for graph plus one oracle naming table at this n
    static std::uint64_t estimated_instance_bytes(int n);

private:
    GluedTreesGraph() = default;

    int n_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint32_t> cycle_left_;   // slot -> left leaf index
    std::vector<std::uint32_t> cycle_right_;  // slot -> right leaf index
    std::vector<std::uint32_t> left_slot_;    // left leaf index -> slot
    std::vector<std::uint32_t> right_slot_;   // right leaf index -> slot

    void build_slots();
    static void check_params(int n, GraphLimits limits);
};

// spec-style free functions
GluedTreesGraph build_graph(int n, std::uint64_t seed, GraphLimits limits = GraphLimits::from_env());
std::vector<VertexId> structural_neighbors(const GluedTreesGraph& g, VertexId v);

}  // namespace gluedtrees
