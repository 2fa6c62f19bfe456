#include "gluedtrees/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gluedtrees {

namespace {

std::uint64_t all_ones(int bits) {
    return bits >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << bits) - 1;
}

// open-addressing membership table keyed by mix64; all-ones is never a name
class NameSet {
public:
    explicit NameSet(std::uint64_t capacity_hint) {
        std::uint64_t cap = 16;
        while (cap < 2 * capacity_hint) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
    }

    bool insert(std::uint64_t name) {
        std::uint64_t i = rng::mix64(name) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == name) return false;
            i = (i + 1) & mask_;
        }
        slots_[i] = name;
        return true;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
    std::vector<std::uint64_t> slots_;
    std::uint64_t mask_ = 0;
};

}  // namespace

Oracle::Oracle(std::shared_ptr<const GluedTreesGraph> graph, std::uint64_t name_seed) {
    graph_ = std::move(graph);
    name_seed_ = name_seed;
    bits_ = name_bits_for(graph_->n());
    const std::uint64_t count = graph_->vertex_count();
    const std::uint64_t reserved = all_ones(bits_);

    rng::Stream s(rng::derive(name_seed, rng::tag::names));
    NameSet used(count);
    names_.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t candidate;
        do {
            candidate = s.next_u64() & reserved;  // low `bits_` bits
        } while (candidate == reserved || !used.insert(candidate));
        names_[v] = candidate;
    }
    build_index();
}

Oracle Oracle::from_parts(std::shared_ptr<const GluedTreesGraph> graph, std::uint64_t name_seed,
                          std::vector<std::uint64_t> names) {
    Oracle o;
    o.graph_ = std::move(graph);
    o.name_seed_ = name_seed;
    o.bits_ = name_bits_for(o.graph_->n());
    if (names.size() != o.graph_->vertex_count())
        throw std::invalid_argument("naming table size does not match vertex count");
    const std::uint64_t reserved = all_ones(o.bits_);
    for (const std::uint64_t name : names)
        if (name >= reserved) throw std::invalid_argument("name outside the assignable space");
    o.names_ = std::move(names);
    o.build_index();
    for (std::size_t i = 1; i < o.index_.size(); ++i)
        if (o.index_[i].first == o.index_[i - 1].first)
            throw std::invalid_argument("duplicate vertex name in naming table");
    return o;
}

void Oracle::build_index() {
    index_.resize(names_.size());
    for (std::uint64_t v = 0; v < names_.size(); ++v) index_[v] = {names_[v], v};
    std::sort(index_.begin(), index_.end());
}

std::optional<VertexId> Oracle::id_of(VertexName name) const {
    const auto it = std::lower_bound(index_.begin(), index_.end(),
                                     std::pair<std::uint64_t, std::uint64_t>{name.bits, 0});
    if (it == index_.end() || it->first != name.bits) return std::nullopt;
    return it->second;
}

OracleResponse Oracle::query(VertexName name) {
    ++query_count_;
    const auto id = id_of(name);
    if (!id) return {};
    std::array<VertexId, 3> nb;
    const int cnt = graph_->neighbors(*id, nb);
    OracleResponse resp;
    resp.degree = std::uint8_t(cnt);
    for (int i = 0; i < cnt; ++i) resp.names[i] = VertexName{names_[nb[i]]};
    std::sort(resp.names.begin(), resp.names.begin() + cnt);
    return resp;
}

Oracle make_oracle(const GluedTreesGraph& g, std::uint64_t name_seed) {
    return Oracle(std::make_shared<GluedTreesGraph>(g), name_seed);
}

std::string name_to_hex(VertexName name, int bits) {
    const int digits = (bits + 3) / 4;
    static const char* kHex = "0123456789abcdef";
    std::string out(digits, '0');
    std::uint64_t v = name.bits;
    for (int i = digits - 1; i >= 0; --i) {
        out[i] = kHex[v & 0xF];
        v >>= 4;
    }
    return out;
}

VertexName name_from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() > 16) throw std::invalid_argument("bad hex name: " + hex);
    std::uint64_t v = 0;
    for (const char c : hex) {
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= std::uint64_t(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= std::uint64_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v |= std::uint64_t(c - 'A' + 10);
        else
            throw std::invalid_argument("bad hex name: " + hex);
    }
    return VertexName{v};
}

}  // namespace gluedtrees
