#include "combperm/metatile.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace combperm {

namespace {

void check_tiles(const std::vector<TileShape>& tiles, int p) {
    if (p < 1) throw std::invalid_argument("resolution must be >= 1");
    if (tiles.empty()) throw std::invalid_argument("tile set must be nonempty");
    for (const auto& t : tiles) {
        t.validate();
        if (t.resolution != p) throw std::invalid_argument("mixed tile resolutions");
    }
}

// counts[l] = weighted number of metatiles of length exactly l cells,
// l = 0..length_cap (counts[0] stays 0).
std::vector<BigInt> metatile_walk_counts(const std::vector<TileShape>& tiles, int p, int length_cap) {
    const long total = static_cast<long>(length_cap) * p;
    std::vector<BigInt> counts(static_cast<std::size_t>(length_cap) + 1, 0);
    std::unordered_map<std::uint64_t, BigInt> layer;
    layer.emplace(0u, 1);
    for (long pos = 0; pos <= total; ++pos) {
        if (pos > 0 && pos % p == 0) {
            auto it = layer.find(0u);
            if (it != layer.end()) {
                counts[static_cast<std::size_t>(pos / p)] += it->second;
                layer.erase(it);  // the walk ends at the flush boundary
            }
        }
        if (pos == total || layer.empty()) break;
        const int res = static_cast<int>(pos % p);
        std::unordered_map<std::uint64_t, BigInt> next;
        for (const auto& [mask, ways] : layer) {
            if (mask & 1ull) {
                next[mask >> 1] += ways;
                continue;
            }
            for (const auto& t : tiles) {
                if (!t.aligned_at(res)) continue;
                if (pos + t.extent() > total) continue;
                const std::uint64_t occ = t.occupancy_mask();
                if (mask & occ) continue;
                next[(mask | occ) >> 1] += ways * t.colors;
            }
        }
        layer = std::move(next);
    }
    return counts;
}

}  // namespace

MetatileCensus census(const std::vector<TileShape>& tiles, int p, int length_cap) {
    if (length_cap < 1) throw std::invalid_argument("length cap must be >= 1");
    check_tiles(tiles, p);

    MetatileCensus c;
    c.length_cap = length_cap;
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            if (i) os << ",";
            os << tiles[i].label;
        }
        c.tile_set = os.str();
    }
    c.total = metatile_walk_counts(tiles, p, length_cap);

    // A metatile is mixed iff it uses more than one label class; subtract the
    // single-label censuses from the total.
    c.mixed = c.total;
    std::set<std::string> labels;
    for (const auto& t : tiles) labels.insert(t.label);
    for (const auto& label : labels) {
        std::vector<TileShape> sub;
        for (const auto& t : tiles)
            if (t.label == label) sub.push_back(t);
        const auto pure = metatile_walk_counts(sub, p, length_cap);
        for (int l = 1; l <= length_cap; ++l) c.mixed[static_cast<std::size_t>(l)] -= pure[static_cast<std::size_t>(l)];
    }
    return c;
}

std::vector<TileShape> mu_tiles(int m1, int m2) {
    if (m1 < 1 || m2 <= m1) throw std::invalid_argument("mu requires 1 <= m1 < m2");
    return {make_comb(2, m1, 1, m1 == 1 ? "h" : "c"), make_comb(2, m2, 1, "C")};
}

SequenceTable mu(int m1, int m2, int length_cap) {
    const auto tiles = mu_tiles(m1, m2);
    const auto c = census(tiles, 2, length_cap);
    SequenceTable t;
    t.start_index = 0;
    t.values = c.mixed;  // index l = metatile length; mu_0 = 0
    return t;
}

bool SlotStateGraph::has_node(const std::string& label) const {
    return std::find(nodes.begin(), nodes.end(), label) != nodes.end();
}

std::string SlotStateGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph slot_states {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << "  \"" << nodes[i] << "\"";
        if (static_cast<int>(i) == start) os << " [shape=doublecircle]";
        os << ";\n";
    }
    for (const auto& arc : arcs)
        os << "  \"" << nodes[static_cast<std::size_t>(arc.from)] << "\" -> \""
           << nodes[static_cast<std::size_t>(arc.to)] << "\" [label=\"" << arc.tile << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string node_label(int residue, std::uint64_t mask) {
    std::string s(static_cast<std::size_t>(residue), '~');
    if (mask == 0) return s + "0";
    int msb = 63;
    while (!(mask & (1ull << msb))) --msb;
    for (int b = 0; b <= msb; ++b) s += (mask & (1ull << b)) ? '1' : '0';
    return s;
}

}  // namespace

SlotStateGraph export_digraph(const std::vector<TileShape>& tiles, int p, const DigraphOptions& opts) {
    check_tiles(tiles, p);
    if (opts.start_residue < 0 || opts.start_residue >= p)
        throw std::invalid_argument("start residue out of range");

    using State = std::pair<int, std::uint64_t>;  // (frontier residue, occupancy ahead)
    struct RawArc {
        int to;
        std::string label;
    };
    std::map<State, int> index;
    std::vector<State> states;
    std::vector<std::vector<RawArc>> raw;
    std::vector<char> exit_node;
    auto intern = [&](const State& st) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        if (static_cast<int>(states.size()) >= opts.node_cap) throw std::runtime_error("digraph node cap exceeded");
        const int id = static_cast<int>(states.size());
        index.emplace(st, id);
        states.push_back(st);
        raw.emplace_back();
        exit_node.push_back(0);
        return id;
    };

    const int start = intern({opts.start_residue, 0u});
    for (std::size_t head = 0; head < states.size(); ++head) {
        const auto [res, mask] = states[head];
        for (const auto& t : tiles) {
            if (!t.aligned_at(res)) continue;
            const std::uint64_t occ = t.occupancy_mask();
            if (mask & occ) continue;
            std::uint64_t m2 = mask | occ;
            int r2 = res;
            while (m2 & 1ull) {
                m2 >>= 1;
                r2 = (r2 + 1) % p;
            }
            if (opts.interior && r2 == 0 && m2 == 0) {
                exit_node[head] = 1;  // a single tile would complete the metatile here
                continue;
            }
            const int to = intern({r2, m2});  // may grow `raw`; index before push
            raw[head].push_back({to, t.label});
        }
    }

    // A node stays visible if a walk can start, end, branch or halt there;
    // forced pass-through states are folded into composite arcs.
    std::vector<char> keep(states.size(), 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        keep[i] = !opts.compress || static_cast<int>(i) == start ||
                  (states[i].first == 0 && states[i].second == 0) || raw[i].size() != 1 ||
                  exit_node[i];
    }

    for (;;) {
        SlotStateGraph g;
        std::vector<int> out_id(states.size(), -1);
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (!keep[i]) continue;
            out_id[i] = static_cast<int>(g.nodes.size());
            g.nodes.push_back(node_label(states[i].first, states[i].second));
        }
        g.start = out_id[static_cast<std::size_t>(start)];
        bool restart = false;
        for (std::size_t i = 0; i < states.size() && !restart; ++i) {
            if (!keep[i]) continue;
            for (const auto& first_hop : raw[i]) {
                std::string label = first_hop.label;
                int v = first_hop.to;
                std::set<int> seen;
                while (!keep[static_cast<std::size_t>(v)]) {
                    if (!seen.insert(v).second) {  // forced cycle; surface the node
                        keep[static_cast<std::size_t>(v)] = 1;
                        restart = true;
                        break;
                    }
                    const auto& hop = raw[static_cast<std::size_t>(v)][0];
                    label += " " + hop.label;
                    v = hop.to;
                }
                if (restart) break;
                g.arcs.push_back({out_id[i], out_id[static_cast<std::size_t>(v)], std::move(label)});
            }
        }
        if (!restart) return g;
    }
}

}  // namespace combperm
