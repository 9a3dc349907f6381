// Randomized cross-checks with a fixed seed: the two counting routes, the
// mirror symmetry, and the slot-swap involution over generated inputs.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "combperm/metatile.hpp"
#include "combperm/permanents.hpp"
#include "combperm/tiling.hpp"

using namespace combperm;

TEST_CASE("random offset sets: dp = ryser and mirror invariance") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> offset(-4, 4);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> xs;
        const int k = size(rng);
        for (int i = 0; i < k; ++i) xs.push_back(offset(rng));
        const OffsetSet W(xs);
        const auto M = mirror(W);
        for (long n = 0; n <= 6; ++n) {
            const BigInt dp = count_restricted_perms(n, W);
            if (n >= 1) CHECK(dp == permanent_ryser(toeplitz_from_W(static_cast<int>(n), W)));
            CHECK(dp == count_restricted_perms(n, M));
            CHECK(dp >= 0);
        }
    }
}

namespace {

std::vector<TileShape> random_half_combs(std::mt19937& rng) {
    std::uniform_int_distribution<int> teeth(1, 4);
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<TileShape> tiles;
    std::vector<int> seen;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const int m = teeth(rng);
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
        seen.push_back(m);
        tiles.push_back(make_comb(2, m, 1, "C" + std::to_string(m)));
    }
    return tiles;
}

}  // namespace

TEST_CASE("random comb sets: enumeration backs the dp and swap is an involution") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 25; ++trial) {
        const auto tiles = random_half_combs(rng);
        std::uniform_int_distribution<int> len(0, 6);
        const int n = len(rng);
        const auto boards = enumerate_tilings(n, tiles, 2);
        CHECK(count_tilings(n, tiles, 2) == static_cast<long long>(boards.size()));
        for (const auto& b : boards) {
            const auto swapped = slot_swap(b);
            CHECK(swapped.complete());
            CHECK(slot_swap(swapped) == b);
            CHECK(std::find(boards.begin(), boards.end(), swapped) != boards.end());
            // Metatile boundaries are preserved: swapping never moves a straddle.
            CHECK(decompose_metatiles(swapped) == decompose_metatiles(b));
        }
    }
}

TEST_CASE("random comb sets: census convolution reproduces tiling counts") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const auto tiles = random_half_combs(rng);
        const auto c = census(tiles, 2, 8);
        std::vector<BigInt> A{1};
        for (int n = 1; n <= 8; ++n) A.push_back(count_tilings(n, tiles, 2));
        for (int n = 1; n <= 8; ++n) {
            BigInt rhs = 0;
            for (int l = 1; l <= n; ++l) rhs += c.total_at(l) * A[static_cast<std::size_t>(n - l)];
            CHECK(A[static_cast<std::size_t>(n)] == rhs);
        }
    }
}

TEST_CASE("slot_swap rejects what it must") {
    // Incomplete board.
    Board partial;
    partial.cells = 2;
    partial.resolution = 2;
    partial.tile_set = std::make_shared<const std::vector<TileShape>>(
        std::vector<TileShape>{make_comb(2, 1, 1, "h")});
    partial.placements = {{0, 0, 0}};
    CHECK_THROWS_AS(slot_swap(partial), std::invalid_argument);

    // A fence tiling whose swapped image is not a fence tiling: F_1 + ~F_0.
    const auto tiles = fence_tiles_from_W(OffsetSet{-1, 1});
    const auto boards = enumerate_tilings(2, tiles, 2);
    REQUIRE(boards.size() == 1);
    CHECK_THROWS_AS(slot_swap(boards[0]), std::domain_error);
}

TEST_CASE("pure operations tolerate concurrent callers") {
    const std::vector<TileShape> tiles{make_comb(2, 1, 1, "h"), make_comb(2, 3, 1, "C")};
    const OffsetSet W{-2, -1, 2};
    std::vector<BigInt> tiling_results(8);
    std::vector<BigInt> perm_results(8);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            tiling_results[static_cast<std::size_t>(t)] = count_tilings(10, tiles, 2);
            perm_results[static_cast<std::size_t>(t)] = count_restricted_perms(18, W);
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
        CHECK(tiling_results[static_cast<std::size_t>(t)] == tiling_results[0]);
        CHECK(perm_results[static_cast<std::size_t>(t)] == perm_results[0]);
    }
}
