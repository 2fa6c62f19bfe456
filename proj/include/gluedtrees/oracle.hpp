// oracle.hpp — query-counting black box over a glued-trees instance. Vertices
// get opaque names drawn without replacement from a w-bit space (w = 2n,
// widened to n+3 for n < 3 so names always outnumber vertices); the all-ones
// pattern is never assigned. Callers recognize the EXIT as a 2-neighbor
// response for a name other than the advertised entrance name.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gluedtrees/graph.hpp"

namespace gluedtrees {

struct VertexName {
    std::uint64_t bits = ~std::uint64_t(0);

    friend auto operator<=>(const VertexName&, const VertexName&) = default;
};

struct OracleResponse {
    std::uint8_t degree = 0;  // 0 means INVALID (name not assigned)
    std::array<VertexName, 3> names{};

    bool valid() const { return degree != 0; }
    std::span<const VertexName> list() const { return {names.data(), degree}; }

    friend bool operator==(const OracleResponse&, const OracleResponse&) = default;
};

class Oracle {
public:
    Oracle(std::shared_ptr<const GluedTreesGraph> graph, std::uint64_t name_seed);

    // validated reconstruction from a serialized naming table
    static Oracle from_parts(std::shared_ptr<const GluedTreesGraph> graph, std::uint64_t name_seed,
                             std::vector<std::uint64_t> names);

    // every call counts, including ones answered INVALID
    OracleResponse query(VertexName name);

    VertexName entrance_name() const { return VertexName{names_[0]}; }
    std::uint64_t query_count() const { return query_count_; }
    int name_bits() const { return bits_; }
    std::uint64_t name_seed() const { return name_seed_; }
    const GluedTreesGraph& graph() const { return *graph_; }
    std::shared_ptr<const GluedTreesGraph> graph_ptr() const { return graph_; }

    // white-box access for serialization and tests; strategies never see these
    const std::vector<std::uint64_t>& names() const { return names_; }
    VertexName name_of(VertexId v) const { return VertexName{names_[v]}; }
    std::optional<VertexId> id_of(VertexName name) const;

    static int name_bits_for(int n) { return n >= 3 ? 2 * n : n + 3; }

private:
    Oracle() = default;

    std::shared_ptr<const GluedTreesGraph> graph_;
    std::uint64_t name_seed_ = 0;
    int bits_ = 0;
    std::vector<std::uint64_t> names_;                            // vertex id -> name
    std::vector<std::pair<std::uint64_t, std::uint64_t>> index_;  // (name, id), sorted
    std::uint64_t query_count_ = 0;

    void build_index();
};

Oracle make_oracle(const GluedTreesGraph& g, std::uint64_t name_seed);

std::string name_to_hex(VertexName name, int bits);
VertexName name_from_hex(const std::string& hex);

}  // namespace gluedtrees

template <>
struct std::hash<gluedtrees::VertexName> {
    std::size_t operator()(const gluedtrees::VertexName& n) const noexcept {
        return std::size_t(gluedtrees::rng::mix64(n.bits));
    }
};
