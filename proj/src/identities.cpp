#include "combperm/identities.hpp"

#include <chrono>
#include <sstream>

#include "combperm/metatile.hpp"
#include "combperm/tiling.hpp"

namespace combperm {

namespace {

// Table lookup with the n<0 -> 0 convention.
BigInt tab(const std::vector<BigInt>& t, long k) {
    if (k < 0) return 0;
    return t.at(static_cast<std::size_t>(k));
}

BigInt tab2(const std::vector<BigInt>& t, long k) {  // squared entry
    if (k < 0) return 0;
    const BigInt& v = t.at(static_cast<std::size_t>(k));
    return v * v;
}

std::vector<BigInt> seq_values(const RecurrenceSpec& spec, long N) {
    return eval_sequence(spec, N).values;
}

}  // namespace

std::string IdentityReport::describe() const {
    std::ostringstream os;
    os << id;
    if (!params.empty()) {
        os << "[";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) os << ",";
            os << k << "=" << v;
            first = false;
        }
        os << "]";
    }
    os << " n=" << n_min << ".." << n_max << " ";
    if (verified)
        os << "verified";
    else
        os << "FAILED at n=" << fail_n << " (lhs=" << lhs << ", rhs=" << rhs << ")";
    return os.str();
}

IdentityReport run_check(std::string id, std::map<std::string, long> params, long n_min, long n_max,
                         const Evaluator& eval) {
    IdentityReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.n_min = n_min;
    r.n_max = n_max;
    const auto t0 = std::chrono::steady_clock::now();
    r.verified = true;
    for (long n = n_min; n <= n_max; ++n) {
        auto [lhs, rhs] = eval(n);
        if (lhs != rhs) {
            r.verified = false;
            r.fail_n = n;
            r.lhs = std::move(lhs);
            r.rhs = std::move(rhs);
            break;
        }
    }
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<BigInt> perm_table(const OffsetSet& W, long N) {
    std::vector<BigInt> t;
    t.reserve(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) t.push_back(count_restricted_perms(n, W));
    return t;
}

Evaluator make_gen1_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m) {
    return [s = std::move(s), P = std::move(P), m](long n) {
        BigInt rhs = (n == 0) ? 1 : 0;
        rhs += tab2(s, n - 1) + tab2(s, n - m - 2);
        BigInt conv = 0;
        for (long l = m + 2; l <= n; ++l) conv += tab(P, l - 1) * tab2(s, n - l);
        rhs += 2 * conv;
        return std::pair{tab2(s, n), rhs};
    };
}

Evaluator make_sum_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m) {
    return [s = std::move(s), P = std::move(P), m](long n) {
        BigInt rhs = 0;
        for (long k = 0; k <= n; ++k) {
            rhs += tab2(s, k);
            BigInt inner = 0;
            for (long i = 0; i <= k; ++i) inner += tab(P, k + m + 1 - i) * tab2(s, i);
            rhs += 2 * inner;
        }
        return std::pair{tab2(s, n + m + 2) - 1, rhs};
    };
}

Evaluator make_block_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m, long j) {
    return [s = std::move(s), P = std::move(P), m, j](long n) {
        BigInt rhs = (j == 0) ? 1 : 0;
        if (j != 0) rhs += tab2(s, j - 1);
        for (long k = 1; k <= n; ++k) {
            rhs += tab2(s, k * (m + 2) + j - 1);
            BigInt inner = 0;
            for (long i = 0; i <= (k - 1) * (m + 2) + j; ++i) inner += tab(P, k * (m + 2) + j - 1 - i) * tab2(s, i);
            rhs += 2 * inner;
        }
        return std::pair{tab2(s, n * (m + 2) + j), rhs};
    };
}

Evaluator make_mixed_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m) {
    return [s = std::move(s), P = std::move(P), m](long n) {
        BigInt rhs = tab(s, n);
        BigInt conv = 0;
        for (long k = 0; k <= n - m - 2; ++k)
            for (long r = m + 2; r <= n - k; ++r) conv += tab(P, r - 1) * tab(s, k) * tab2(s, n - k - r);
        rhs += 2 * conv;
        return std::pair{tab2(s, n), rhs};
    };
}

Evaluator make_gen2_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m) {
    return [s = std::move(s), P = std::move(P), m](long n) {
        BigInt rhs = (n == 0) ? 1 : 0;
        rhs += tab2(s, n - m - 1) + tab2(s, n - m - 2);
        BigInt conv = 0;
        for (long l = 2 * m + 3; l <= n; ++l) conv += tab(P, l - 2 * m - 3) * tab2(s, n - l);
        rhs += 2 * conv;
        return std::pair{tab2(s, n), rhs};
    };
}

Evaluator make_mixed2_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m) {
    return [s = std::move(s), P = std::move(P), m](long n) {
        BigInt rhs = tab(s, n);
        BigInt conv = 0;
        for (long k = 0; k <= n - 2 * m - 3; ++k)
            for (long r = 2 * m + 3; r <= n - k; ++r) conv += tab(P, r - 2 * m - 3) * tab(s, k) * tab2(s, n - k - r);
        rhs += 2 * conv;
        return std::pair{tab2(s, n), rhs};
    };
}

namespace {

RecurrenceSpec spec_1_q(long m) {  // s^{(1,m+2)}
    return RecurrenceSpec{{1, 1}, {static_cast<int>(m) + 2, 1}};
}

RecurrenceSpec spec_q_q1(long m) {  // s^{(m+1,m+2)}
    return RecurrenceSpec{{static_cast<int>(m) + 1, 1}, {static_cast<int>(m) + 2, 1}};
}

OffsetSet W_I(long m) { return OffsetSet{-2, -1, static_cast<int>(m)}; }
OffsetSet W_II(long m) { return OffsetSet{-2, static_cast<int>(m) - 1, static_cast<int>(m)}; }

}  // namespace

IdentityReport verify_identity_gen1(long m, long N) {
    if (m < 0) throw std::invalid_argument("gen1 requires m >= 0");
    return run_check("gen1", {{"m", m}}, 0, N,
                     make_gen1_eval(seq_values(spec_1_q(m), N), perm_table(W_I(m), std::max(N - 1, 0L)), m));
}

IdentityReport verify_identity_sum(long m, long N) {
    if (m < 0) throw std::invalid_argument("sum requires m >= 0");
    return run_check("sum", {{"m", m}}, 0, N,
                     make_sum_eval(seq_values(spec_1_q(m), N + m + 2), perm_table(W_I(m), N + m + 1), m));
}

IdentityReport verify_identity_block(long m, long j, long N) {
    if (m < 0) throw std::invalid_argument("block requires m >= 0");
    if (j < 0 || j > m + 1) throw std::invalid_argument("block requires 0 <= j <= m+1");
    const long top = N * (m + 2) + j;
    return run_check("block", {{"j", j}, {"m", m}}, 0, N,
                     make_block_eval(seq_values(spec_1_q(m), top), perm_table(W_I(m), std::max(top - 1, 0L)), m, j));
}

IdentityReport verify_identity_mixed(long m, long N) {
    if (m < 0) throw std::invalid_argument("mixed requires m >= 0");
    return run_check("mixed", {{"m", m}}, 0, N,
                     make_mixed_eval(seq_values(spec_1_q(m), N), perm_table(W_I(m), std::max(N - 1, 0L)), m));
}

IdentityReport verify_identity_gen2(long m, long N) {
    if (m < 1) throw std::invalid_argument("gen2 requires m >= 1");
    return run_check("gen2", {{"m", m}}, 0, N,
                     make_gen2_eval(seq_values(spec_q_q1(m), N), perm_table(W_II(m), N), m));
}

IdentityReport verify_identity_mixed2(long m, long N) {
    if (m < 1) throw std::invalid_argument("mixed2 requires m >= 1");
    return run_check("mixed2", {{"m", m}}, 0, N,
                     make_mixed2_eval(seq_values(spec_q_q1(m), N), perm_table(W_II(m), N), m));
}

std::vector<NamedEvaluator> narayana_padovan_evaluators(long N) {
    // c_n and p_n computed straight from their recurrences, not via permanents.
    const auto c = seq_values(RecurrenceSpec{{1, 1}, {3, 1}}, 3 * N + 3);
    const auto p = seq_values(RecurrenceSpec{{2, 1}, {3, 1}}, 3 * N + 3);

    std::vector<NamedEvaluator> out;
    out.push_back({"genc", {}, [c, p](long n) {
                       BigInt rhs = (n == 0) ? 1 : 0;
                       rhs += tab2(c, n - 1) + tab2(c, n - 3);
                       BigInt conv = 0;
                       for (long l = 3; l <= n; ++l) conv += tab(p, l - 1) * tab2(c, n - l);
                       return std::pair{tab2(c, n), rhs + 2 * conv};
                   }});
    out.push_back({"genp", {}, [c, p](long n) {
                       BigInt rhs = (n == 0) ? 1 : 0;
                       rhs += tab2(p, n - 2) + tab2(p, n - 3);
                       BigInt conv = 0;
                       for (long l = 5; l <= n; ++l) conv += tab(c, l - 5) * tab2(p, n - l);
                       return std::pair{tab2(p, n), rhs + 2 * conv};
                   }});
    out.push_back({"cn+3", {}, [c, p](long n) {
                       BigInt rhs = 0;
                       for (long k = 0; k <= n; ++k) {
                           rhs += tab2(c, k);
                           BigInt inner = 0;
                           for (long i = 0; i <= k; ++i) inner += tab(p, k + 2 - i) * tab2(c, i);
                           rhs += 2 * inner;
                       }
                       return std::pair{tab2(c, n + 3) - 1, rhs};
                   }});
    for (long j = 0; j <= 2; ++j) {
        out.push_back({"c3n+j", {{"j", j}}, [c, p, j](long n) {
                           BigInt rhs = (j == 0) ? 1 : 0;
                           if (j != 0) rhs += tab2(c, j - 1);
                           for (long k = 1; k <= n; ++k) {
                               rhs += tab2(c, 3 * k + j - 1);
                               BigInt inner = 0;
                               for (long i = 0; i <= 3 * (k - 1) + j; ++i)
                                   inner += tab(p, 3 * k + j - 1 - i) * tab2(c, i);
                               rhs += 2 * inner;
                           }
                           return std::pair{tab2(c, 3 * n + j), rhs};
                       }});
    }
    out.push_back({"c2-c", {}, [c, p](long n) {
                       BigInt rhs = tab(c, n);
                       BigInt conv = 0;
                       for (long k = 0; k <= n - 3; ++k)
                           for (long r = 3; r <= n - k; ++r) conv += tab(p, r - 1) * tab(c, k) * tab2(c, n - k - r);
                       return std::pair{tab2(c, n), rhs + 2 * conv};
                   }});
    out.push_back({"p2-p", {}, [c, p](long n) {
                       BigInt rhs = tab(p, n);
                       BigInt conv = 0;
                       for (long k = 0; k <= n - 5; ++k)
                           for (long r = 5; r <= n - k; ++r) conv += tab(c, r - 5) * tab(p, k) * tab2(p, n - k - r);
                       return std::pair{tab2(p, n), rhs + 2 * conv};
                   }});
    return out;
}

std::vector<IdentityReport> verify_narayana_padovan(long N) {
    std::vector<IdentityReport> out;
    for (auto& ev : narayana_padovan_evaluators(N)) out.push_back(run_check(ev.id, ev.params, 0, N, ev.eval));
    return out;
}

IdentityReport verify_theorem2(const RecurrenceSpec& spec, int p, long N) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    std::vector<TileShape> tiles;
    for (const auto& [m, v] : spec.terms) {
        TileShape t;
        t.resolution = 1;
        t.tooth_len = 1;
        t.gap_len = p - 1;
        t.teeth = m;
        t.colors = v;
        t.label = "C" + std::to_string(m);
        t.validate();
        tiles.push_back(t);
    }
    const auto s = eval_sequence(spec, N + 1);
    return run_check("theorem2", {{"p", p}}, 0, static_cast<long>(p) * N + p - 1,
                     [tiles = std::move(tiles), s = std::move(s), p](long L) {
                         const long n = L / p;
                         const int r = static_cast<int>(L % p);
                         return std::pair{count_tilings(static_cast<int>(L), tiles, 1),
                                          power_product(s, p, r, n)};
                     });
}

IdentityReport verify_corollary3(const RecurrenceSpec& spec, int p, long N) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    std::vector<TileShape> tiles;
    for (const auto& [m, v] : spec.terms) tiles.push_back(make_comb(p, m, v));
    const auto s = eval_sequence(spec, N);
    return run_check("corollary3", {{"p", p}}, 0, N, [tiles = std::move(tiles), s = std::move(s), p](long n) {
        return std::pair{count_tilings(static_cast<int>(n), tiles, p),
                         big_pow(s.at(n), static_cast<unsigned>(p))};
    });
}

std::vector<IdentityReport> verify_mu_theorems(int m_max, int L_max) {
    if (m_max < 0 || L_max < 2) throw std::invalid_argument("need m_max >= 0 and L_max >= 2");
    std::vector<IdentityReport> out;
    for (int m = 0; m <= m_max; ++m) {
        auto mu_table = mu(1, m + 2, L_max);
        auto P = perm_table(W_I(m), L_max - 1);
        out.push_back(run_check("mu1", {{"m", m}}, 2, L_max,
                                [mu_table = std::move(mu_table), P = std::move(P)](long l) {
                                    return std::pair{mu_table.at(l), 2 * tab(P, l - 1)};
                                }));
    }
    for (int m = 1; m <= m_max; ++m) {
        const int cap = 2 * m + L_max;
        auto mu_table = mu(m + 1, m + 2, cap);
        auto P = perm_table(W_II(m), L_max - 3);
        out.push_back(run_check("mu2", {{"m", m}}, 2 * m + 3, cap,
                                [mu_table = std::move(mu_table), P = std::move(P), m](long l) {
                                    return std::pair{mu_table.at(l), 2 * tab(P, l - 2 * m - 3)};
                                }));
    }
    return out;
}

}  // namespace combperm
