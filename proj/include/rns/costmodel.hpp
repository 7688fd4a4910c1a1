// Clock/step cost model for residue and binary digit machines.
//
// Everything here is derived from the maximal natural system of a digit
// width Q: p primes below 2^Q, exact range R, effective width n_e = log2(R).
// The per-operation clock predictions follow the digit-parallel model that
// counter.hpp charges, so instrumented runs can be validated against the
// model. Binary baselines use N = ceil(n/Q) radix-2^Q digits.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rns/counter.hpp"
#include "rns/system.hpp"

namespace rns {

struct CostParams {
    unsigned Q = 0;
    std::size_t p = 0;
    double n_e = 0.0;              // exact effective width, log2(R)
    std::int64_t n_e_int = 0;      // printed width, ceil(n_e)
    std::int64_t binary_digits = 0;  // N = ceil(n_e / Q)
};

struct ClockRange {
    double lo = 0.0, hi = 0.0;
};

struct CostReport {
    // residue machine, digit steps
    ClockRange add{1, 1}, sub{1, 1}, int_mul{1, 1};
    ClockRange frac_mul;   // [p, 2p]
    ClockRange compare;    // [p, 2p]
    ClockRange reverse;    // p
    ClockRange forward;    // ceil(n/Q)
    // binary baselines at N digits
    double schoolbook_add = 0.0;   // N
    double lookahead_add = 0.0;    // N / log2(N)
    double digit_mul = 0.0;        // 2N
    double karatsuba = 0.0;        // N^1.585
    double newton_div = 0.0;       // N
};

// standard M x M matrix multiply on the binary machine, M^3 * 2N clocks
double matmul_clocks_binary(std::size_t M, std::int64_t N);
// delayed-normalization multiply, M^3 integer MACs + M^2 normalizations
double matmul_clocks_rns_delayed(std::size_t M, std::size_t p);
// Strassen cost formulas, evaluated numerically only
double matmul_clocks_strassen_binary(std::size_t M, std::int64_t N);
double matmul_clocks_strassen_rns(std::size_t M, std::size_t p);

// the derived interpretation columns for one digit width
struct InterpretationRow {
    double log2_p = 0.0;
    double ne_over_log2p = 0.0;   // from the printed (ceil) width
    double log2p_over_q = 0.0;    // digit-count ratio, the plotted series
    double ne_over_q = 0.0;
    std::int64_t two_ne_over_q = 0;
};

struct Model {
    CostParams params;
    CostReport report;
    InterpretationRow interpretation;
};

// builds max_system_for_digit_width(Q); 4 <= Q <= 20
Model model_for(unsigned Q);

// Tabular output. Rows hold already-formatted cells so that every render
// target prints identical numbers.
struct Table {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// ids 2, 3, 5; rows over Q in [q_lo, q_hi]
Table emit_table(int table_id, unsigned q_lo, unsigned q_hi);
// graph 1: x = p over [lo, hi]; graphs 2 and 3: x = Q over [lo, hi]
Table emit_graph_data(int graph_id, unsigned lo, unsigned hi);

std::string render_csv(const Table& t);
std::string render_text(const Table& t);
std::string render_json(const Table& t);

struct MeasuredOp {
    std::string op;  // add | sub | int_mul | frac_mul | compare | reverse
    std::uint64_t steps = 0;
};

struct ValidationResult {
    bool pass = true;
    std::vector<std::string> failures;
};

ValidationResult validate_counters(const CostParams& params, std::span<const MeasuredOp> measured);

// Digit-count approximation p = n/log2(p) against the true prime count at
// width Q, with the error reported three ways (percent).
struct ApproxCheckpoint {
    unsigned Q = 0;
    std::size_t p_true = 0;
    double n_e = 0.0;
    double estimate = 0.0;       // n_e / log2(p_true)
    double solved = 0.0;         // fixed point of the relation
    double err_vs_estimate = 0.0;
    double err_vs_true = 0.0;
    double err_symmetric = 0.0;  // gap over the midpoint of estimate and truth
};

ApproxCheckpoint approx_checkpoint(unsigned Q);

std::string format_fixed(double v, int places);

}  // namespace rns
