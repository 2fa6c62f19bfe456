#include "gluedtrees/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gluedtrees/errors.hpp"

namespace gluedtrees {

GraphLimits GraphLimits::from_env() {
    GraphLimits limits;
    if (const char* env = std::getenv("GLUEDTREES_MAX_MEM_MB")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) limits.max_mem_mb = v;
    }
    return limits;
}

std::uint64_t GluedTreesGraph::estimated_instance_bytes(int n) {
    const std::uint64_t m = std::uint64_t(1) << n;
    const std::uint64_t vertices = (m << 2) - 2;
    const std::uint64_t cycle_tables = 4 * m * sizeof(std::uint32_t);
    const std::uint64_t naming = vertices * (8 + 16 + 8);  // names + sorted index + dedup table
    return cycle_tables + naming;
}

void GluedTreesGraph::check_params(int n, GraphLimits limits) {
    if (n < 1) throw std::invalid_argument("glued trees require n >= 1");
    if (n > 31) throw ResourceError("n > 31 exceeds the 32-bit leaf index representation");
    const std::uint64_t need = estimated_instance_bytes(n);
    const std::uint64_t budget = limits.max_mem_mb * (std::uint64_t(1) << 20);
    if (need > budget)
        throw ResourceError("instance at n=" + std::to_string(n) + " needs ~" +
                            std::to_string(need >> 20) + " MiB, budget is " +
                            std::to_string(limits.max_mem_mb) + " MiB (GLUEDTREES_MAX_MEM_MB)");
}

GluedTreesGraph GluedTreesGraph::build(int n, std::uint64_t seed, GraphLimits limits) {
    check_params(n, limits);
    GluedTreesGraph g;
    g.n_ = n;
    g.seed_ = seed;
    const std::uint32_t m = std::uint32_t(1) << n;
    // a uniform alternating cycle: independent uniform orders for the left and
    // right leaves around the 2m cycle slots (left drawn first, then right)
    rng::Stream s(rng::derive(seed, rng::tag::cycle));
    g.cycle_left_ = rng::random_permutation(m, s);
    g.cycle_right_ = rng::random_permutation(m, s);
    g.build_slots();
    return g;
}

GluedTreesGraph GluedTreesGraph::from_cycle(int n, std::uint64_t seed,
                                            const std::vector<std::uint64_t>& interleaved,
                                            GraphLimits limits) {
    check_params(n, limits);
    const std::uint64_t m = std::uint64_t(1) << n;
    if (interleaved.size() != 2 * m)
        throw std::invalid_argument("middle cycle must list 2^{n+1} leaves");
    GluedTreesGraph g;
    g.n_ = n;
    g.seed_ = seed;
    g.cycle_left_.resize(m);
    g.cycle_right_.resize(m);
    for (std::uint64_t k = 0; k < m; ++k) {
        const std::uint64_t l = interleaved[2 * k];
        const std::uint64_t r = interleaved[2 * k + 1];
        if (l >= m || r >= m) throw std::invalid_argument("middle cycle leaf index out of range");
        g.cycle_left_[k] = std::uint32_t(l);
        g.cycle_right_[k] = std::uint32_t(r);
    }
    std::vector<bool> seen_l(m, false), seen_r(m, false);
    for (std::uint64_t k = 0; k < m; ++k) {
        if (seen_l[g.cycle_left_[k]] || seen_r[g.cycle_right_[k]])
            throw std::invalid_argument("middle cycle is not a pair of permutations");
        seen_l[g.cycle_left_[k]] = true;
        seen_r[g.cycle_right_[k]] = true;
    }
    g.build_slots();
    return g;
}

void GluedTreesGraph::build_slots() {
    const std::uint32_t m = std::uint32_t(1) << n_;
    left_slot_.resize(m);
    right_slot_.resize(m);
    for (std::uint32_t k = 0; k < m; ++k) {
        left_slot_[cycle_left_[k]] = k;
        right_slot_[cycle_right_[k]] = k;
    }
}

int GluedTreesGraph::level_of(VertexId v) const {
    const std::uint64_t left_count = (std::uint64_t(1) << (n_ + 1)) - 1;
    if (v < left_count) return std::bit_width(v + 1) - 1;
    const std::uint64_t mirrored = (vertex_count() - 1) - v;  // EXIT -> 0
    return 2 * n_ + 1 - (std::bit_width(mirrored + 1) - 1);
}

int GluedTreesGraph::height_of(VertexId v) const {
    const int l = level_of(v);
    return l <= n_ ? n_ - l : l - n_ - 1;
}

std::uint64_t GluedTreesGraph::level_offset(int level) const {
    if (level <= n_) return (std::uint64_t(1) << level) - 1;
    return (std::uint64_t(1) << (n_ + 2)) - 1 - (std::uint64_t(1) << (2 * n_ + 2 - level));
}

std::uint64_t GluedTreesGraph::level_width(int level) const {
    return std::uint64_t(1) << std::min(level, 2 * n_ + 1 - level);
}

int GluedTreesGraph::neighbors(VertexId v, std::array<VertexId, 3>& out) const {
    const int l = level_of(v);
    const std::uint64_t idx = v - level_offset(l);
    const std::uint32_t m = std::uint32_t(1) << n_;
    int cnt = 0;
    if (l == 0) {
        out[cnt++] = vertex_at(1, 0);
        out[cnt++] = vertex_at(1, 1);
    } else if (l < n_) {
        out[cnt++] = vertex_at(l - 1, idx >> 1);
        out[cnt++] = vertex_at(l + 1, 2 * idx);
        out[cnt++] = vertex_at(l + 1, 2 * idx + 1);
    } else if (l == n_) {
        const std::uint32_t k = left_slot_[idx];
        out[cnt++] = vertex_at(n_ - 1, idx >> 1);
        out[cnt++] = vertex_at(n_ + 1, cycle_right_[k]);
        out[cnt++] = vertex_at(n_ + 1, cycle_right_[(k + m - 1) % m]);
    } else if (l == n_ + 1) {
        const std::uint32_t k = right_slot_[idx];
        out[cnt++] = vertex_at(n_, cycle_left_[k]);
        out[cnt++] = vertex_at(n_, cycle_left_[(k + 1) % m]);
        out[cnt++] = vertex_at(n_ + 2, idx >> 1);
    } else if (l < 2 * n_ + 1) {
        out[cnt++] = vertex_at(l - 1, 2 * idx);
        out[cnt++] = vertex_at(l - 1, 2 * idx + 1);
        out[cnt++] = vertex_at(l + 1, idx >> 1);
    } else {
        out[cnt++] = vertex_at(2 * n_, 0);
        out[cnt++] = vertex_at(2 * n_, 1);
    }
    std::sort(out.begin(), out.begin() + cnt);
    return cnt;
}

std::vector<std::uint64_t> GluedTreesGraph::middle_cycle_interleaved() const {
    const std::uint64_t m = leaf_count();
    std::vector<std::uint64_t> cycle(2 * m);
    for (std::uint64_t k = 0; k < m; ++k) {
        cycle[2 * k] = cycle_left_[k];
        cycle[2 * k + 1] = cycle_right_[k];
    }
    return cycle;
}

GluedTreesGraph build_graph(int n, std::uint64_t seed, GraphLimits limits) {
    return GluedTreesGraph::build(n, seed, limits);
}

std::vector<VertexId> structural_neighbors(const GluedTreesGraph& g, VertexId v) {
    std::array<VertexId, 3> nb;
    const int cnt = g.neighbors(v, nb);
    return std::vector<VertexId>(nb.begin(), nb.begin() + cnt);
}

}  // namespace gluedtrees
