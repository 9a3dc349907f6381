#include "combperm/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace combperm {

bool TileShape::aligned_at(int slot) const {
    if (!alignment) return true;
    const int r = slot % resolution;
    return std::find(alignment->begin(), alignment->end(), r) != alignment->end();
}

void TileShape::validate() const {
    if (resolution < 1) throw std::invalid_argument("tile resolution must be >= 1");
    if (tooth_len < 1) throw std::invalid_argument("tooth_len must be >= 1");
    if (gap_len < 0) throw std::invalid_argument("gap_len must be >= 0");
    if (teeth < 1) throw std::invalid_argument("teeth must be >= 1");
    if (colors < 1) throw std::invalid_argument("colors must be >= 1");
    if (extent() > 63) throw std::invalid_argument("tile extent exceeds 63 slots");
    if (alignment) {
        if (alignment->empty()) throw std::invalid_argument("alignment residue set must be nonempty");
        for (int r : *alignment)
            if (r < 0 || r >= resolution) throw std::invalid_argument("alignment residue out of range");
    }
}

std::uint64_t TileShape::occupancy_mask() const {
    std::uint64_t m = 0;
    for (int t = 0; t < teeth; ++t)
        for (int k = 0; k < tooth_len; ++k) m |= 1ull << (t * stride() + k);
    return m;
}

TileShape make_comb(int p, int m, long long colors, std::string label) {
    TileShape t;
    t.resolution = p;
    t.tooth_len = 1;
    t.gap_len = p - 1;
    t.teeth = m;
    t.colors = colors;
    t.label = label.empty() ? "C" + std::to_string(m) : std::move(label);
    t.validate();
    return t;
}

TileShape make_fence(int g, bool barred) {
    if (g < 0) throw std::invalid_argument("fence gap must be >= 0");
    TileShape t;
    t.resolution = 2;
    t.tooth_len = 1;
    t.gap_len = 2 * g;
    t.teeth = 2;
    t.alignment = std::vector<int>{barred ? 1 : 0};
    t.label = (barred ? "~F" : "F") + std::to_string(g);
    t.validate();
    return t;
}

std::vector<int> Board::occupancy() const {
    std::vector<int> occ(static_cast<std::size_t>(total_slots()), -1);
    for (std::size_t i = 0; i < placements.size(); ++i) {
        const auto& pl = placements[i];
        const auto& sh = shape(pl);
        for (int t = 0; t < sh.teeth; ++t)
            for (int k = 0; k < sh.tooth_len; ++k) {
                const int s = pl.start + t * sh.stride() + k;
                if (s < 0 || s >= total_slots()) throw std::logic_error("placement outside board");
                if (occ[static_cast<std::size_t>(s)] != -1) throw std::logic_error("overlapping placements");
                occ[static_cast<std::size_t>(s)] = static_cast<int>(i);
            }
    }
    return occ;
}

bool Board::complete() const {
    const auto occ = occupancy();
    return std::find(occ.begin(), occ.end(), -1) == occ.end();
}

int Board::distinct_labels() const {
    std::set<std::string> labels;
    for (const auto& pl : placements) labels.insert(shape(pl).label);
    return static_cast<int>(labels.size());
}

std::string Board::symbolic() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        if (i) os << " ";
        os << shape(placements[i]).label;
    }
    return os.str();
}

namespace {

void check_tiles(const std::vector<TileShape>& tiles, int p) {
    if (p < 1) throw std::invalid_argument("resolution must be >= 1");
    for (const auto& t : tiles) {
        t.validate();
        if (t.resolution != p) throw std::invalid_argument("mixed tile resolutions");
    }
}

}  // namespace

// Broken-profile DP over the occupancy of the slots ahead of the frontier.
// The frontier always sits on the lowest empty slot; placing a tile there and
// advancing one slot keeps each tiling counted exactly once.
BigInt count_tilings(int n, const std::vector<TileShape>& tiles, int p) {
    if (n < 0) throw std::invalid_argument("board size must be >= 0");
    check_tiles(tiles, p);
    const long total = static_cast<long>(n) * p;

    std::unordered_map<std::uint64_t, BigInt> layer;
    layer.emplace(0u, 1);
    for (long pos = 0; pos < total; ++pos) {
        std::unordered_map<std::uint64_t, BigInt> next;
        const int res = static_cast<int>(pos % p);
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
    auto it = layer.find(0u);
    return it == layer.end() ? BigInt(0) : it->second;
}

namespace {

struct TilingSearch {
    const std::vector<TileShape>& tiles;
    int p;
    long total_slots;
    long long cap;
    bool single_metatile;
    std::vector<int> occ;         // slot -> 1 if filled
    long cover_end = 0;           // one past the highest occupied slot
    Board current;
    std::vector<Board>* out;

    void run() {
        dfs(0);
    }

    void dfs(long frontier) {
        while (frontier < total_slots && occ[static_cast<std::size_t>(frontier)]) ++frontier;
        if (single_metatile && frontier == cover_end && frontier % p == 0 && frontier > 0 &&
            frontier < total_slots) {
            return;  // a metatile closed early; the tiling is not a single metatile
        }
        if (frontier == total_slots) {
            if (static_cast<long long>(out->size()) >= cap) throw std::runtime_error("enumeration cap exceeded");
            Board b = current;
            std::sort(b.placements.begin(), b.placements.end(),
                      [](const Placement& a, const Placement& c) { return a.key() < c.key(); });
            out->push_back(std::move(b));
            return;
        }
        for (std::size_t ti = 0; ti < tiles.size(); ++ti) {
            const auto& t = tiles[ti];
            if (!t.aligned_at(static_cast<int>(frontier % p))) continue;
            if (frontier + t.extent() > total_slots) continue;
            bool free = true;
            for (int tooth = 0; tooth < t.teeth && free; ++tooth)
                for (int k = 0; k < t.tooth_len; ++k)
                    if (occ[static_cast<std::size_t>(frontier + tooth * t.stride() + k)]) {
                        free = false;
                        break;
                    }
            if (!free) continue;
            for (int tooth = 0; tooth < t.teeth; ++tooth)
                for (int k = 0; k < t.tooth_len; ++k)
                    occ[static_cast<std::size_t>(frontier + tooth * t.stride() + k)] = 1;
            const long saved_cover = cover_end;
            cover_end = std::max(cover_end, frontier + t.extent());
            for (int color = 0; color < t.colors; ++color) {
                current.placements.push_back({static_cast<int>(ti), color, static_cast<int>(frontier)});
                dfs(frontier + 1);
                current.placements.pop_back();
            }
            cover_end = saved_cover;
            for (int tooth = 0; tooth < t.teeth; ++tooth)
                for (int k = 0; k < t.tooth_len; ++k)
                    occ[static_cast<std::size_t>(frontier + tooth * t.stride() + k)] = 0;
        }
    }
};

std::vector<Board> enumerate_impl(int n, const std::vector<TileShape>& tiles, int p, long long cap,
                                  bool single_metatile) {
    if (n < 0) throw std::invalid_argument("board size must be >= 0");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    check_tiles(tiles, p);
    std::vector<Board> out;
    TilingSearch search{tiles, p, static_cast<long>(n) * p, cap, single_metatile, {}, 0, Board{}, &out};
    search.occ.assign(static_cast<std::size_t>(n) * p, 0);
    search.current.cells = n;
    search.current.resolution = p;
    search.current.tile_set = std::make_shared<const std::vector<TileShape>>(tiles);
    search.run();
    return out;
}

}  // namespace

std::vector<Board> enumerate_tilings(int n, const std::vector<TileShape>& tiles, int p, long long cap) {
    return enumerate_impl(n, tiles, p, cap, false);
}

std::vector<Board> enumerate_metatiles(int l, const std::vector<TileShape>& tiles, int p, long long cap) {
    if (l < 1) throw std::invalid_argument("metatile length must be >= 1");
    return enumerate_impl(l, tiles, p, cap, true);
}

Board slot_swap(const Board& t) {
    if (t.resolution != 2) throw std::invalid_argument("slot_swap requires p = 2");
    if (!t.complete()) throw std::invalid_argument("slot_swap requires a complete tiling");
    Board out = t;
    for (auto& pl : out.placements) {
        const auto& sh = t.shape(pl);
        // The swapped slot set must still be a placement of the same shape.
        std::set<int> image;
        for (int tooth = 0; tooth < sh.teeth; ++tooth)
            for (int k = 0; k < sh.tooth_len; ++k) image.insert((pl.start + tooth * sh.stride() + k) ^ 1);
        const int start = *image.begin();
        std::set<int> expected;
        for (int tooth = 0; tooth < sh.teeth; ++tooth)
            for (int k = 0; k < sh.tooth_len; ++k) expected.insert(start + tooth * sh.stride() + k);
        if (image != expected || !sh.aligned_at(start))
            throw std::domain_error("slot_swap image is not a valid placement of the same shape");
        pl.start = start;
    }
    std::sort(out.placements.begin(), out.placements.end(),
              [](const Placement& a, const Placement& b) { return a.key() < b.key(); });
    out.occupancy();  // validates no overlap
    return out;
}

std::vector<int> decompose_metatiles(const Board& t) {
    if (!t.complete()) throw std::invalid_argument("decompose_metatiles requires a complete tiling");
    std::vector<int> cuts{0};
    for (int c = 1; c < t.cells; ++c) {
        const int b = c * t.resolution;
        bool straddled = false;
        for (const auto& pl : t.placements) {
            const auto& sh = t.shape(pl);
            if (pl.start < b && pl.start + sh.extent() > b) {
                straddled = true;
                break;
            }
        }
        if (!straddled) cuts.push_back(c);
    }
    if (t.cells > 0) cuts.push_back(t.cells);
    return cuts;
}

std::vector<TileShape> fence_tiles_from_W(const OffsetSet& W) {
    std::vector<TileShape> tiles;
    for (int w : W.offsets) {
        if (w < 0)
            tiles.push_back(make_fence(-w - 1, true));
        else
            tiles.push_back(make_fence(w, false));
    }
    return tiles;
}

}  // namespace combperm
