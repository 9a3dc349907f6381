#include "combperm/permanents.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace combperm {

bool OffsetSet::contains(int w) const {
    return std::binary_search(offsets.begin(), offsets.end(), w);
}

std::string OffsetSet::describe() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) os << ",";
        os << offsets[i];
    }
    os << "}";
    return os.str();
}

// Positions are processed in increasing order. The state is a window of
// span+1 bits over the values [i+min(W), i+max(W)]: bit b set means value
// i+min(W)+b is already claimed (or lies outside [1,n] and so never can be).
// When the window slides, the exiting value must be claimed: later positions
// can no longer reach it.
BigInt count_restricted_perms(long n, const OffsetSet& W, int span_cap) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const int span = W.span();
    if (span > span_cap || span > 31) throw std::invalid_argument("offset span exceeds cap");
    const int lo = W.min();
    const int hi = W.max();
    const std::uint32_t full = (span >= 31) ? ~0u : ((1u << (span + 1)) - 1u);

    auto out_of_range = [n](long v) { return v < 1 || v > n; };

    std::uint32_t init = 0;
    for (int b = 0; b <= span; ++b)
        if (out_of_range(1 + lo + b)) init |= (1u << b);

    std::unordered_map<std::uint32_t, BigInt> layer;
    layer.emplace(init, 1);
    for (long i = 1; i <= n; ++i) {
        std::unordered_map<std::uint32_t, BigInt> next;
        for (const auto& [mask, ways] : layer) {
            for (int w : W.offsets) {
                const long v = i + w;
                if (out_of_range(v)) continue;
                const int b = w - lo;
                if (mask & (1u << b)) continue;
                std::uint32_t claimed = mask | (1u << b);
                if (!(claimed & 1u)) continue;  // exiting value i+lo left unclaimed
                std::uint32_t shifted = claimed >> 1;
                if (out_of_range(i + 1 + hi)) shifted |= (1u << span);
                next[shifted] += ways;
            }
        }
        layer = std::move(next);
    }

    auto it = layer.find(full);
    return it == layer.end() ? BigInt(0) : it->second;
}

BigInt permanent_ryser(const ZeroOneMatrix& M, int order_cap) {
    const int n = M.n;
    if (n > order_cap) throw std::invalid_argument("matrix order exceeds Ryser cap");
    if (n == 0) return 1;
    BigInt total = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t cols = 1; cols < limit; ++cols) {
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) {
            long rowsum = 0;
            for (int j = 0; j < n; ++j)
                if (cols & (1u << j)) rowsum += M.at(i, j);
            prod *= rowsum;
        }
        if ((n - __builtin_popcount(cols)) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

ZeroOneMatrix toeplitz_from_W(int n, const OffsetSet& W) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    ZeroOneMatrix M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (W.contains(j - i)) M.at(i, j) = 1;
    return M;
}

SequenceTable theorem1_sequence(const OffsetSet& W, long N) {
    if (!W.contains(-1)) throw std::invalid_argument("theorem1 requires -1 in W");
    std::vector<int> ds;
    for (int w : W.offsets) {
        if (w < 0 && w != -1) throw std::invalid_argument("theorem1 requires -1 as the only negative element");
        if (w >= 0) ds.push_back(w);
    }
    if (ds.empty() || ds.back() <= 0) throw std::invalid_argument("theorem1 requires d_r > 0");

    SequenceTable t;
    t.start_index = 0;
    t.values.resize(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        BigInt v = (n == 0) ? 1 : 0;
        for (int d : ds) {
            const long k = n - d - 1;
            if (k >= 0) v += t.values[static_cast<std::size_t>(k)];
        }
        t.values[static_cast<std::size_t>(n)] = std::move(v);
    }
    return t;
}

OffsetSet mirror(const OffsetSet& W) {
    std::vector<int> neg;
    neg.reserve(W.offsets.size());
    for (int w : W.offsets) neg.push_back(-w);
    return OffsetSet(neg);
}

SequenceTable a080013_sequence(long N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    SequenceTable t;
    t.start_index = 0;
    t.values.resize(static_cast<std::size_t>(N) + 1);
    auto prev = [&t](long k) -> BigInt { return k < 0 ? BigInt(0) : t.values[static_cast<std::size_t>(k)]; };
    for (long n = 0; n <= N; ++n) {
        BigInt v = prev(n - 2) + prev(n - 3) + prev(n - 4) - prev(n - 6);
        if (n == 0) v += 1;
        if (n == 2) v -= 1;
        t.values[static_cast<std::size_t>(n)] = std::move(v);
    }
    return t;
}

}  // namespace combperm
