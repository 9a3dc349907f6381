#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combperm/bigint.hpp"

namespace combperm {

// Weighted sparse recurrence s_n = sum_i v_i * s_{n-m_i} + [n==0], s_{n<0} = 0.
// Terms are (m_i, v_i) with 0 < m_1 < m_2 < ... and v_i >= 1.
struct RecurrenceSpec {
    std::vector<std::pair<int, long long>> terms;  // (offset m_i, weight v_i)

    RecurrenceSpec(std::initializer_list<std::pair<int, long long>> t)
        : RecurrenceSpec(std::vector<std::pair<int, long long>>(t)) {}

    explicit RecurrenceSpec(std::vector<std::pair<int, long long>> t) : terms(std::move(t)) {
        if (terms.empty()) throw std::invalid_argument("recurrence needs at least one term");
        int prev = 0;
        for (const auto& [m, v] : terms) {
            if (m <= prev) throw std::invalid_argument("offsets must be positive and strictly increasing");
            if (v < 1) throw std::invalid_argument("weights must be >= 1");
            prev = m;
        }
    }

    std::size_t order() const { return terms.size(); }
    std::string describe() const;
};

// Integer sequence indexed from start_index.
struct SequenceTable {
    long start_index = 0;
    std::vector<BigInt> values;

    long max_index() const { return start_index + static_cast<long>(values.size()) - 1; }

    const BigInt& at(long n) const {
        if (n < start_index || n > max_index()) throw std::out_of_range("sequence index out of range");
        return values[static_cast<std::size_t>(n - start_index)];
    }

    // Indices below start_index read as 0 (the s_{n<0}=0 convention).
    BigInt at_or_zero(long n) const {
        if (n < start_index) return 0;
        return at(n);
    }
};

// s_0..s_N for the given recurrence.
SequenceTable eval_sequence(const RecurrenceSpec& spec, long N);

// s_n^{p-r} * s_{n+1}^r.
BigInt power_product(const SequenceTable& table, int p, int r, long n);

}  // namespace combperm
