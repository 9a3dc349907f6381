#include <doctest.h>

#include <algorithm>
#include <set>

#include "combperm/identities.hpp"
#include "combperm/metatile.hpp"

using namespace combperm;

namespace {

TileShape h() { return make_comb(2, 1, 1, "h"); }

}  // namespace

TEST_CASE("census for h plus a 3-tooth comb") {
    const std::vector<TileShape> tiles{h(), make_comb(2, 3, 1, "C")};
    const auto c = census(tiles, 2, 3);
    CHECK(c.total_at(1) == 1);   // h^2
    CHECK(c.mixed_at(1) == 0);
    CHECK(c.total_at(2) == 0);
    CHECK(c.total_at(3) == 3);   // C^2, C h^3, h C h^2
    CHECK(c.mixed_at(3) == 2);
}

TEST_CASE("census with a single tile type has no mixed metatiles") {
    const auto c = census({h()}, 2, 6);
    CHECK(c.total_at(1) == 1);
    for (int l = 2; l <= 6; ++l) {
        CHECK(c.total_at(l) == 0);
        CHECK(c.mixed_at(l) == 0);
    }
}

TEST_CASE("smallest mixed metatiles for (c, C) at m=1") {
    const auto table = mu(2, 3, 5);
    CHECK(table.at(5) == 2);
    for (long l = 0; l <= 4; ++l) CHECK(table.at(l) == 0);

    auto boards = enumerate_metatiles(5, mu_tiles(2, 3), 2);
    std::vector<std::string> syms;
    for (const auto& b : boards)
        if (b.distinct_labels() == 2) syms.push_back(b.symbolic());
    std::sort(syms.begin(), syms.end());
    CHECK(syms == std::vector<std::string>{"C c C c", "c C C c"});
}

TEST_CASE("mu matches the permanent sequences") {
    for (int m = 0; m <= 2; ++m) {
        const auto table = mu(1, m + 2, 10);
        const auto P = perm_table(OffsetSet{-2, -1, m}, 9);
        for (long l = 2; l <= 10; ++l) CHECK(table.at(l) == 2 * P[static_cast<std::size_t>(l - 1)]);
    }
    for (int m = 1; m <= 2; ++m) {
        const int cap = 2 * m + 10;
        const auto table = mu(m + 1, m + 2, cap);
        const auto P = perm_table(OffsetSet{-2, m - 1, m}, 7);
        for (long l = 2 * m + 3; l <= cap; ++l)
            CHECK(table.at(l) == 2 * P[static_cast<std::size_t>(l - 2 * m - 3)]);
    }
}

TEST_CASE("mu^{(1,4)} and mu^{(3,4)} line up") {
    const auto a = mu(1, 4, 9);
    const auto b = mu(3, 4, 15);
    // The smallest mixed metatiles differ in length (m+2 vs 2m+3), so the
    // alignment starts at n = 1; mu_1 is 0 while mu_7^{(3,4)} = 2 P_0 = 2.
    CHECK(a.at(1) == 0);
    CHECK(b.at(7) == 2);
    for (long n = 1; n <= 8; ++n) CHECK(a.at(n + 1) == b.at(n + 7));
}

TEST_CASE("mixed counts are even") {
    for (auto [m1, m2] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}) {
        const auto table = mu(m1, m2, 12);
        for (long l = 0; l <= 12; ++l) CHECK(table.at(l) % 2 == 0);
    }
}

TEST_CASE("tiling counts decompose over the census") {
    // A_n = sum_l total(l) * A_{n-l}: condition on the metatile at the end.
    const std::vector<std::vector<TileShape>> sets{{h(), make_comb(2, 3, 1, "C")}, mu_tiles(2, 3)};
    for (const auto& tiles : sets) {
        const auto c = census(tiles, 2, 10);
        std::vector<BigInt> A{1};
        for (int n = 1; n <= 10; ++n) A.push_back(count_tilings(n, tiles, 2));
        for (int n = 1; n <= 10; ++n) {
            BigInt rhs = 0;
            for (int l = 1; l <= n; ++l) rhs += c.total_at(l) * A[static_cast<std::size_t>(n - l)];
            CHECK(A[static_cast<std::size_t>(n)] == rhs);
        }
    }
}

TEST_CASE("census and metatile enumeration agree") {
    const std::vector<TileShape> tiles{h(), make_comb(2, 3, 1, "C")};
    const auto c = census(tiles, 2, 7);
    for (int l = 1; l <= 7; ++l) {
        const auto boards = enumerate_metatiles(l, tiles, 2);
        CHECK(c.total_at(l) == static_cast<long long>(boards.size()));
        long mixed = 0;
        for (const auto& b : boards) {
            CHECK(decompose_metatiles(b) == std::vector<int>{0, l});
            if (b.distinct_labels() >= 2) ++mixed;
        }
        CHECK(c.mixed_at(l) == mixed);
    }
}

TEST_CASE("digraph for half-squares alone is one self-loop") {
    const auto g = export_digraph({h()}, 2);
    REQUIRE(g.nodes.size() == 1);
    CHECK(g.nodes[0] == "0");
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0].from == 0);
    CHECK(g.arcs[0].to == 0);
    CHECK(g.arcs[0].tile == "h h");
}

TEST_CASE("interior digraph nodes pair up under the half-turn") {
    for (int m = 1; m <= 3; ++m) {
        const std::vector<TileShape> tiles{h(), make_comb(2, m + 2, 1, "C")};
        DigraphOptions opts;
        opts.start_residue = 1;
        opts.interior = true;
        const auto g = export_digraph(tiles, 2, opts);

        auto rep = [](const std::string& unit, int q) {
            std::string s;
            for (int i = 0; i < q; ++i) s += unit;
            return s;
        };
        // Expected node set: (~01)^q for q=0..m and (01)^q for q=1..m+1.
        std::set<std::string> expected;
        for (int q = 0; q <= m; ++q) expected.insert(q == 0 ? "~0" : "~" + rep("01", q));
        for (int q = 1; q <= m + 1; ++q) expected.insert(rep("01", q));
        CHECK(std::set<std::string>(g.nodes.begin(), g.nodes.end()) == expected);

        // Partner map: (01)^{q+1} <-> (~01)^q.
        auto partner = [&](const std::string& label) {
            if (label[0] == '~') {
                const int q = static_cast<int>((label.size() - 1) / 2);
                return rep("01", q + 1);
            }
            const int q = static_cast<int>(label.size() / 2);
            return q == 1 ? std::string("~0") : "~" + rep("01", q - 1);
        };
        std::set<std::tuple<std::string, std::string, std::string>> arcset;
        for (const auto& a : g.arcs)
            arcset.insert({g.nodes[static_cast<std::size_t>(a.from)],
                           g.nodes[static_cast<std::size_t>(a.to)], a.tile});
        CHECK(!arcset.empty());
        for (const auto& [from, to, tile] : arcset)
            CHECK(arcset.count({partner(from), partner(to), tile}) == 1);
    }
}

TEST_CASE("fence digraph has the even-m node") {
    for (int m = 1; m <= 4; ++m) {
        const auto tiles = fence_tiles_from_W(OffsetSet{-2, -1, m});
        const auto g = export_digraph(tiles, 2);
        const std::string special = "~" + std::string(static_cast<std::size_t>(m), '0') + "1";
        CHECK(g.has_node(special) == (m % 2 == 0));
    }
}

TEST_CASE("fence digraph composes forced chains") {
    // For m=2 the walk leaving ~00001 with ~F1 is forced through F2 and ~F1.
    const auto tiles = fence_tiles_from_W(OffsetSet{-2, -1, 2});
    const auto g = export_digraph(tiles, 2);
    CHECK(g.has_node("0"));
    CHECK(g.has_node("~00001"));
    bool composite = false;
    for (const auto& a : g.arcs) composite = composite || a.tile == "~F1 F2 ~F1";
    CHECK(composite);
}

TEST_CASE("digraph guards") {
    DigraphOptions opts;
    opts.node_cap = 1;
    const std::vector<TileShape> tiles{h(), make_comb(2, 3, 1, "C")};
    CHECK_THROWS_AS(export_digraph(tiles, 2, opts), std::runtime_error);
    DigraphOptions bad;
    bad.start_residue = 2;
    CHECK_THROWS_AS(export_digraph(tiles, 2, bad), std::invalid_argument);
}

TEST_CASE("dot output is well formed") {
    const auto g = export_digraph({h(), make_comb(2, 3, 1, "C")}, 2);
    const auto dot = g.to_dot();
    CHECK(dot.find("digraph slot_states {") == 0);
    CHECK(dot.find("\"0\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.back() == '\n');
}
