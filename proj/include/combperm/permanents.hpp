#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "combperm/bigint.hpp"
#include "combperm/recurrence.hpp"

namespace combperm {

// Finite set W of allowed displacements pi(i)-i for strongly restricted
// permutations; doubles as the set of nonzero diagonals of the Toeplitz
// matrix (diagonal w above the main diagonal is nonzero iff w in W).
struct OffsetSet {
    std::vector<int> offsets;  // sorted, unique

    OffsetSet(std::initializer_list<int> xs) : OffsetSet(std::vector<int>(xs)) {}

    explicit OffsetSet(std::vector<int> xs) {
        std::set<int> s(xs.begin(), xs.end());
        if (s.empty()) throw std::invalid_argument("offset set must be nonempty");
        offsets.assign(s.begin(), s.end());
    }

    int min() const { return offsets.front(); }
    int max() const { return offsets.back(); }
    int span() const { return max() - min(); }
    bool contains(int w) const;
    std::string describe() const;  // "{-2,-1,m}" style
};

struct ZeroOneMatrix {
    int n = 0;
    std::vector<std::uint8_t> entries;  // row-major

    explicit ZeroOneMatrix(int order) : n(order), entries(static_cast<std::size_t>(order) * order, 0) {
        if (order < 0) throw std::invalid_argument("matrix order must be >= 0");
    }

    std::uint8_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

inline constexpr int kDefaultSpanCap = 20;
inline constexpr int kRyserOrderCap = 12;

// P_n^W by the sliding-window transfer DP. Exact for span(W) <= span_cap.
BigInt count_restricted_perms(long n, const OffsetSet& W, int span_cap = kDefaultSpanCap);

// Inclusion-exclusion permanent; independent oracle, gated to n <= order_cap.
BigInt permanent_ryser(const ZeroOneMatrix& M, int order_cap = kRyserOrderCap);

// n x n matrix with entry(i,j) = 1 iff j - i in W.
ZeroOneMatrix toeplitz_from_W(int n, const OffsetSet& W);

// For W = {-1, d_1, ..., d_r} with 0 <= d_1 < ... < d_r, d_r > 0:
// P_n = P_{n-d_1-1} + ... + P_{n-d_r-1} + [n==0].
SequenceTable theorem1_sequence(const OffsetSet& W, long N);

// W^(-1) = {-x : x in W}; P_n is invariant under this.
OffsetSet mirror(const OffsetSet& W);

// P_n = P_{n-2} + P_{n-3} + P_{n-4} - P_{n-6} + [n==0] - [n==2]  (OEIS A080013,
// equal to P_n^{{-2,-1,2}}).
SequenceTable a080013_sequence(long N);

}  // namespace combperm
