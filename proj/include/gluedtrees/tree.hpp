// tree.hpp — rooted query trees. Node 0 is the root; parent[i] < i, so index
// order is a valid sampling order for embeddings.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gluedtrees {

struct RootedTree {
    std::vector<std::int32_t> parent;  // parent[0] == -1

    int size() const { return int(parent.size()); }
};

enum class TreeShape { Path, Caterpillar, RandomAttach, FullBinary };

// seed is consumed by RandomAttach only
RootedTree make_tree(TreeShape shape, int t, std::uint64_t seed = 0);

std::optional<TreeShape> parse_tree_shape(std::string_view name);
const char* to_string(TreeShape shape);

// throws std::invalid_argument on a malformed parent array
void validate_tree(const RootedTree& tree);

}  // namespace gluedtrees
