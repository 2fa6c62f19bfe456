// enumerate.hpp — exact win probability on a fixed graph by depth-first
// enumeration of every embedding choice. Each non-root node has 1 or 2
// admissible candidates, so probabilities are dyadic: the result is an exact
// fraction with denominator 2^{t-1}.
#pragma once

#include <cstdint>

#include "gluedtrees/graph.hpp"
#include "gluedtrees/rational.hpp"
#include "gluedtrees/tree.hpp"

namespace gluedtrees {

struct EnumerationLimits {
    std::uint64_t max_branches = std::uint64_t(1) << 22;  // bound on 2^{t-1}
};

// probability that one play of the game on `g` wins (exits or is improper)
Fraction enumerate_win_probability(const GluedTreesGraph& g, const RootedTree& tree,
                                   EnumerationLimits limits = {});

}  // namespace gluedtrees
