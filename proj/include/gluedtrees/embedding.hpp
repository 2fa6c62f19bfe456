// embedding.hpp — the random-embedding game. An embedding maps tree nodes to
// graph vertices: the root lands on ENTRANCE and every other node picks a
// uniform neighbor of its parent's image, excluding its grandparent's image
// (non-backtracking). Candidates are considered in ascending vertex order and
// each non-root node consumes exactly one bounded draw, so a (graph, tree,
// stream key) triple fixes the embedding bit-for-bit.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gluedtrees/graph.hpp"
#include "gluedtrees/rng.hpp"
#include "gluedtrees/tree.hpp"

namespace gluedtrees {

struct Embedding {
    std::vector<VertexId> image;  // one vertex per tree node
};

struct GameResult {
    bool exited = false;
    bool improper = false;
    bool won = false;
};

// reusable buffers for hot loops
struct GameScratch {
    std::vector<VertexId> image;
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

void sample_embedding_into(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream,
                           std::vector<VertexId>& image);
Embedding sample_embedding(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream);

// true iff two distinct non-root nodes share an image reached from different
// parent images
bool is_improper(const RootedTree& tree, const Embedding& e);
bool is_improper_buf(const RootedTree& tree, const std::vector<VertexId>& image,
                     std::vector<std::pair<VertexId, VertexId>>& pairs);

bool reaches_exit(const GluedTreesGraph& g, const Embedding& e);

GameResult play_game(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream);
GameResult play_game(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream,
                     GameScratch& scratch);

}  // namespace gluedtrees
