#include "gluedtrees/embedding.hpp"

#include <algorithm>
#include <array>

namespace gluedtrees {

void sample_embedding_into(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream,
                           std::vector<VertexId>& image) {
    const int t = tree.size();
    image.resize(std::size_t(t));
    image[0] = g.entrance();
    std::array<VertexId, 3> nb;
    for (int a = 1; a < t; ++a) {
        const int p = tree.parent[a];
        int cnt = g.neighbors(image[p], nb);
        if (p != 0) {
            const VertexId grand = image[tree.parent[p]];
            for (int k = 0; k < cnt; ++k) {
                if (nb[k] == grand) {
                    for (int j = k + 1; j < cnt; ++j) nb[j - 1] = nb[j];  // keep ascending order
                    --cnt;
                    break;
                }
            }
        }
        image[a] = nb[stream.next_below(std::uint64_t(cnt))];
    }
}

Embedding sample_embedding(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream) {
    Embedding e;
    sample_embedding_into(g, tree, stream, e.image);
    return e;
}

bool is_improper_buf(const RootedTree& tree, const std::vector<VertexId>& image,
                     std::vector<std::pair<VertexId, VertexId>>& pairs) {
    const int t = tree.size();
    pairs.clear();
    for (int a = 1; a < t; ++a) pairs.emplace_back(image[a], image[tree.parent[a]]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first && pairs[i].second != pairs[i - 1].second)
            return true;
    return false;
}

bool is_improper(const RootedTree& tree, const Embedding& e) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    return is_improper_buf(tree, e.image, pairs);
}

bool reaches_exit(const GluedTreesGraph& g, const Embedding& e) {
    const VertexId exit = g.exit();
    for (const VertexId v : e.image)
        if (v == exit) return true;
    return false;
}

GameResult play_game(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream,
                     GameScratch& scratch) {
    sample_embedding_into(g, tree, stream, scratch.image);
    GameResult r;
    const VertexId exit = g.exit();
    for (const VertexId v : scratch.image)
        if (v == exit) {
            r.exited = true;
            break;
        }
    r.improper = is_improper_buf(tree, scratch.image, scratch.pairs);
    r.won = r.exited || r.improper;
    return r;
}

GameResult play_game(const GluedTreesGraph& g, const RootedTree& tree, rng::Stream& stream) {
    GameScratch scratch;
    return play_game(g, tree, stream, scratch);
}

}  // namespace gluedtrees
