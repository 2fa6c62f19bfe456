#include "gluedtrees/enumerate.hpp"

#include <array>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "gluedtrees/errors.hpp"

namespace gluedtrees {

namespace {

struct EnumState {
    const GluedTreesGraph& g;
    const RootedTree& tree;
    int t;
    std::vector<VertexId> image;
    std::vector<std::pair<VertexId, VertexId>> assigned;  // (image, parent image), nodes 1..depth
    std::uint64_t win_units = 0;
};

// mass of the current prefix in units of 2^{-(t-1)}
std::uint64_t prefix_units(const EnumState& st, int halvings) {
    return std::uint64_t(1) << (st.t - 1 - halvings);
}

void dfs(EnumState& st, int node, int halvings, bool winning) {
    if (winning) {
        st.win_units += prefix_units(st, halvings);
        return;
    }
    if (node == st.t) return;

    const int p = st.tree.parent[node];
    const VertexId pv = st.image[p];
    std::array<VertexId, 3> nb;
    int cnt = st.g.neighbors(pv, nb);
    if (p != 0) {
        const VertexId grand = st.image[st.tree.parent[p]];
        for (int k = 0; k < cnt; ++k) {
            if (nb[k] == grand) {
                for (int j = k + 1; j < cnt; ++j) nb[j - 1] = nb[j];
                --cnt;
                break;
            }
        }
    }
    assert(cnt == 1 || cnt == 2);

    for (int k = 0; k < cnt; ++k) {
        const VertexId v = nb[k];
        bool wins_here = (v == st.g.exit());
        if (!wins_here) {
            for (const auto& [image, parent_image] : st.assigned) {
                if (image == v && parent_image != pv) {
                    wins_here = true;
                    break;
                }
            }
        }
        st.image[node] = v;
        st.assigned.emplace_back(v, pv);
        dfs(st, node + 1, halvings + (cnt == 2 ? 1 : 0), wins_here);
        st.assigned.pop_back();
    }
}

}  // namespace

Fraction enumerate_win_probability(const GluedTreesGraph& g, const RootedTree& tree,
                                   EnumerationLimits limits) {
    validate_tree(tree);
    const int t = tree.size();
    if (t > 63 || (std::uint64_t(1) << (t - 1)) > limits.max_branches)
        throw ResourceError("enumeration over 2^" + std::to_string(t - 1) +
                            " branches exceeds the configured budget");

    EnumState st{g, tree, t, std::vector<VertexId>(std::size_t(t)), {}, 0};
    st.image[0] = g.entrance();
    st.assigned.reserve(std::size_t(t));
    dfs(st, 1, 0, false);
    return Fraction(static_cast<long long>(st.win_units)) /
           Fraction(static_cast<long long>(std::uint64_t(1) << (t - 1)));
}

}  // namespace gluedtrees
