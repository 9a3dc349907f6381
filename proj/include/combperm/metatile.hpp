#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combperm/bigint.hpp"
#include "combperm/recurrence.hpp"
#include "combperm/tiling.hpp"

namespace combperm {

// Exact metatile counts by length. mixed counts metatiles built from at
// least two distinct tile labels.
struct MetatileCensus {
    std::string tile_set;  // descriptor
    int length_cap = 0;
    std::vector<BigInt> total;  // index l = 1..length_cap (index 0 unused)
    std::vector<BigInt> mixed;

    const BigInt& total_at(int l) const { return total.at(static_cast<std::size_t>(l)); }
    const BigInt& mixed_at(int l) const { return mixed.at(static_cast<std::size_t>(l)); }
};

// Metatiles are walks in the slot-state space from an empty frontier back to
// an empty frontier at a cell boundary, never flush at a boundary in between.
MetatileCensus census(const std::vector<TileShape>& tiles, int p, int length_cap);

// mu_l for (1/2,1/2;m1)- and (1/2,1/2;m2)-combs, l = 0..length_cap
// (mu_0 = 0; the table exists so callers can index by metatile length).
SequenceTable mu(int m1, int m2, int length_cap);

// The two comb shapes used by mu(); exposed for enumeration-based checks.
std::vector<TileShape> mu_tiles(int m1, int m2);

struct DigraphArc {
    int from = 0;
    int to = 0;
    std::string tile;
};

// Slot-state digraph: nodes are occupancy strings ahead of the first empty
// slot, prefixed with one '~' per slot the frontier sits past a cell
// boundary ("~0" is the barred empty node at p=2). Arcs place one tile
// whose first tooth covers the frontier slot.
struct SlotStateGraph {
    std::vector<std::string> nodes;  // discovery (BFS) order
    int start = 0;
    std::vector<DigraphArc> arcs;

    bool has_node(const std::string& label) const;
    std::string to_dot() const;
};

struct DigraphOptions {
    int start_residue = 0;  // 0 starts at the empty cell boundary node
    // Drop arcs that would return to the flush boundary node; with
    // start_residue=1 this yields the interior-tile digraph. Nodes whose
    // completing arc was dropped are exit nodes and always stay visible.
    bool interior = false;
    // Compose forced chains (nodes with a single outgoing arc) into one arc
    // whose label lists the tiles added, e.g. "~F1 F0 ~F1".
    bool compress = true;
    int node_cap = 10000;
};

SlotStateGraph export_digraph(const std::vector<TileShape>& tiles, int p,
                              const DigraphOptions& opts = {});

}  // namespace combperm
