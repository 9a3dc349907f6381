#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "combperm/bigint.hpp"
#include "combperm/permanents.hpp"

namespace combperm {

// A comb at integer slot resolution p: `teeth` sub-tiles of tooth_len slots
// separated by gaps of gap_len slots. Covers fences (teeth=2), plain tiles
// (teeth=1) and squares. Placement may be restricted to start residues mod p.
struct TileShape {
    int resolution = 1;   // p, slots per cell
    int tooth_len = 1;    // slots, >= 1
    int gap_len = 0;      // slots, >= 0
    int teeth = 1;        // >= 1
    std::optional<std::vector<int>> alignment;  // start residues mod p; nullopt = any
    long long colors = 1;
    std::string label;

    int stride() const { return tooth_len + gap_len; }
    // Slots from the first tooth's start to the last tooth's end.
    int extent() const { return (teeth - 1) * stride() + tooth_len; }
    bool aligned_at(int slot) const;
    void validate() const;
    // Bitmask of occupied slot offsets relative to the start slot.
    std::uint64_t occupancy_mask() const;
};

// (1/p, 1-1/p; m)-comb: unit teeth at resolution p.
TileShape make_comb(int p, int m, long long colors = 1, std::string label = {});

// Fences at p=2. F_g starts in a left slot; Fbar_g (label "~F<g>") starts in
// a right slot. Both have unit teeth and a gap of g cells.
TileShape make_fence(int g, bool barred);

struct Placement {
    int shape = 0;  // index into the board's tile set
    int color = 0;  // 0-based color label
    int start = 0;  // slot index of the first tooth

    friend bool operator==(const Placement&, const Placement&) = default;
    auto key() const { return std::tuple(start, shape, color); }
};

// A complete or partial tiling of an n-cell board at resolution p. The tile
// set is shared by every board of one enumeration. Equality is unlabeled:
// boards agree iff their placement multisets agree.
struct Board {
    int cells = 0;
    int resolution = 1;
    std::shared_ptr<const std::vector<TileShape>> tile_set;
    std::vector<Placement> placements;  // kept sorted by (start, shape, color)

    int total_slots() const { return cells * resolution; }
    const TileShape& shape(const Placement& pl) const {
        return (*tile_set)[static_cast<std::size_t>(pl.shape)];
    }
    std::vector<int> occupancy() const;  // slot -> placement index, -1 if empty
    bool complete() const;
    int distinct_labels() const;
    std::string symbolic() const;  // tile labels in placement order, e.g. "h C h h"

    friend bool operator==(const Board& a, const Board& b) {
        return a.cells == b.cells && a.resolution == b.resolution && a.placements == b.placements;
    }
};

// Exact weighted count of complete tilings of an n-cell board; colors act as
// multiplicative weights. A_0 = 1.
BigInt count_tilings(int n, const std::vector<TileShape>& tiles, int p);

inline constexpr long long kDefaultEnumCap = 1'000'000;

// Every complete tiling exactly once, colors expanded into labeled copies.
// Throws if more than `cap` tilings exist.
std::vector<Board> enumerate_tilings(int n, const std::vector<TileShape>& tiles, int p,
                                     long long cap = kDefaultEnumCap);

// Complete tilings of an l-cell board that form a single metatile (no interior
// cell boundary is flush).
std::vector<Board> enumerate_metatiles(int l, const std::vector<TileShape>& tiles, int p,
                                       long long cap = kDefaultEnumCap);

// Interchange the contents of the two slots of every cell (p=2 only).
Board slot_swap(const Board& t);

// Cell indices 0 = b_0 < b_1 < ... < b_k = n such that no tile straddles any
// b_i; consecutive boundaries delimit the metatiles of the tiling.
std::vector<int> decompose_metatiles(const Board& t);

// Fence tile set realizing P_n^W as tilings of an n-board (p=2):
// -g in W (g>0) -> ~F_{g-1}, g >= 0 in W -> F_g.
std::vector<TileShape> fence_tiles_from_W(const OffsetSet& W);

}  // namespace combperm
