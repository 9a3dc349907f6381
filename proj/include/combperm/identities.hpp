#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combperm/bigint.hpp"
#include "combperm/permanents.hpp"
#include "combperm/recurrence.hpp"

namespace combperm {

struct IdentityReport {
    std::string id;
    std::map<std::string, long> params;  // e.g. {"m",1} or {"m",2},{"j",0}
    long n_min = 0;
    long n_max = 0;
    bool verified = false;
    long fail_n = -1;  // first failing index, -1 when verified
    BigInt lhs;        // side values at the failure
    BigInt rhs;
    double elapsed_s = 0.0;

    std::string describe() const;
};

// Evaluates (LHS, RHS) of an identity at index n. All arithmetic is exact;
// out-of-range sequence indices follow the s_{n<0}=0 / P_{n<0}=0 conventions.
using Evaluator = std::function<std::pair<BigInt, BigInt>(long)>;

IdentityReport run_check(std::string id, std::map<std::string, long> params, long n_min, long n_max,
                         const Evaluator& eval);

// P_0^W..P_N^W as a plain table (transfer DP per entry).
std::vector<BigInt> perm_table(const OffsetSet& W, long N);

// Evaluator factories over explicit tables, so callers can substitute
// deliberately wrong tables and watch the check fail.
Evaluator make_gen1_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m);
Evaluator make_sum_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m);
Evaluator make_block_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m, long j);
Evaluator make_mixed_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m);
Evaluator make_gen2_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m);
Evaluator make_mixed2_eval(std::vector<BigInt> s, std::vector<BigInt> P, long m);

// General-m identities: s = s^{(1,m+2)} against P^{{-2,-1,m}} for the first
// four, s = s^{(m+1,m+2)} against P^{{-2,m-1,m}} for the last two.
IdentityReport verify_identity_gen1(long m, long N);
IdentityReport verify_identity_sum(long m, long N);
IdentityReport verify_identity_block(long m, long j, long N);
IdentityReport verify_identity_mixed(long m, long N);
IdentityReport verify_identity_gen2(long m, long N);    // m >= 1
IdentityReport verify_identity_mixed2(long m, long N);  // m >= 1

struct NamedEvaluator {
    std::string id;
    std::map<std::string, long> params;
    Evaluator eval;
};

// The six Narayana's cows / Padovan specializations as standalone evaluators
// over directly computed c and p tables (c3n+j appears once per j = 0,1,2).
// Valid for indices up to N.
std::vector<NamedEvaluator> narayana_padovan_evaluators(long N);

// Runs each specialization for n = 0..N.
std::vector<IdentityReport> verify_narayana_padovan(long N);

// A_{pn+r} = s_n^{p-r} s_{n+1}^r: tiling counts with (1,p-1;m_i)-combs,
// checked for every board length 0..p*N+p-1.
IdentityReport verify_theorem2(const RecurrenceSpec& spec, int p, long N);

// A_n = s_n^p: tiling counts with (1/p,1-1/p;m_i)-combs for n = 0..N.
IdentityReport verify_corollary3(const RecurrenceSpec& spec, int p, long N);

// mu_l^{(1,m+2)} = 2 P_{l-1}^{{-2,-1,m}}   (l = 2..L_max), m = 0..m_max, and
// mu_l^{(m+1,m+2)} = 2 P_{l-2m-3}^{{-2,m-1,m}}  (l = 2m+3..2m+L_max), m = 1..m_max.
std::vector<IdentityReport> verify_mu_theorems(int m_max, int L_max);

}  // namespace combperm
