#include "combperm/recurrence.hpp"

#include <sstream>

namespace combperm {

std::string RecurrenceSpec::describe() const {
    std::ostringstream os;
    os << "s[n]=";
    bool first = true;
    for (const auto& [m, v] : terms) {
        if (!first) os << "+";
        if (v != 1) os << v << "*";
        os << "s[n-" << m << "]";
        first = false;
    }
    return os.str();
}

SequenceTable eval_sequence(const RecurrenceSpec& spec, long N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    SequenceTable t;
    t.start_index = 0;
    t.values.resize(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        BigInt v = (n == 0) ? 1 : 0;
        for (const auto& [m, w] : spec.terms) {
            if (n - m >= 0) v += w * t.values[static_cast<std::size_t>(n - m)];
        }
        t.values[static_cast<std::size_t>(n)] = std::move(v);
    }
    return t;
}

BigInt power_product(const SequenceTable& table, int p, int r, long n) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (r < 0 || r >= p) throw std::invalid_argument("r must lie in [0, p-1]");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return big_pow(table.at(n), static_cast<unsigned>(p - r)) *
           big_pow(table.at(n + 1), static_cast<unsigned>(r));
}

}  // namespace combperm
