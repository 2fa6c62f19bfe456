#include "gluedtrees/tree.hpp"

#include <stdexcept>

#include "gluedtrees/rng.hpp"

namespace gluedtrees {

RootedTree make_tree(TreeShape shape, int t, std::uint64_t seed) {
    if (t < 1) throw std::invalid_argument("tree must have at least one node");
    RootedTree tree;
    tree.parent.assign(std::size_t(t), -1);
    switch (shape) {
        case TreeShape::Path:
            for (int i = 1; i < t; ++i) tree.parent[i] = i - 1;
            break;
        case TreeShape::Caterpillar: {
            // spine of ceil(t/2) nodes, remaining legs hang off spine nodes in order
            const int spine = (t + 1) / 2;
            for (int i = 1; i < spine; ++i) tree.parent[i] = i - 1;
            for (int i = spine; i < t; ++i) tree.parent[i] = i - spine;
            break;
        }
        case TreeShape::RandomAttach: {
            rng::Stream s(rng::derive(seed, rng::tag::trees));
            for (int i = 1; i < t; ++i) tree.parent[i] = std::int32_t(s.next_below(std::uint64_t(i)));
            break;
        }
        case TreeShape::FullBinary:
            for (int i = 1; i < t; ++i) tree.parent[i] = (i - 1) / 2;
            break;
        default:
            throw std::invalid_argument("unknown tree shape");
    }
    return tree;
}

std::optional<TreeShape> parse_tree_shape(std::string_view name) {
    if (name == "path") return TreeShape::Path;
    if (name == "caterpillar") return TreeShape::Caterpillar;
    if (name == "random_attach") return TreeShape::RandomAttach;
    if (name == "full_binary") return TreeShape::FullBinary;
    return std::nullopt;
}

const char* to_string(TreeShape shape) {
    switch (shape) {
        case TreeShape::Path: return "path";
        case TreeShape::Caterpillar: return "caterpillar";
        case TreeShape::RandomAttach: return "random_attach";
        case TreeShape::FullBinary: return "full_binary";
    }
    return "?";
}

void validate_tree(const RootedTree& tree) {
    if (tree.parent.empty()) throw std::invalid_argument("tree must have at least one node");
    if (tree.parent[0] != -1) throw std::invalid_argument("node 0 must be the root (parent -1)");
    for (std::size_t i = 1; i < tree.parent.size(); ++i)
        if (tree.parent[i] < 0 || std::size_t(tree.parent[i]) >= i)
            throw std::invalid_argument("parent[i] must be in [0, i)");
}

}  // namespace gluedtrees
