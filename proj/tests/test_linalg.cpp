#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rns/linalg.hpp"
#include "rns/matrix_io.hpp"
#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace rns;

namespace {

SplitPtr tiny_split() { return FracSplit::make(RnsSystem::make({2, 3, 5, 7}), {3, 5}); }
SplitPtr roomy_split() { return FracSplit::make(natural_system(8), {3, 5}); }

FixedVector vec(const SplitPtr& s, std::vector<std::int64_t> payloads) {
    FixedVector v;
    v.split = s;
    for (auto k : payloads) v.payloads.push_back(forward_int(BigInt(k), s->system()));
    return v;
}

std::int64_t payload_of(const RnsFixed& v) { return reverse_int(v.payload).to_i64(); }

Rational value_of(const RnsFixed& v) {
    return Rational(reverse_int(v.payload), v.split->frac_range());
}

Rational dot_oracle(const FixedVector& x, const FixedVector& y) {
    Rational acc;
    const BigInt& F = x.split->frac_range();
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = acc + Rational(reverse_int(x.payloads[i]), F) * Rational(reverse_int(y.payloads[i]), F);
    return acc;
}

}  // namespace

TEST_CASE("range budget arithmetic") {
    auto split = tiny_split();
    CHECK_FALSE(range_budget_check(*split, 2, BigInt(9)).ok);   // 162 > 104
    CHECK(range_budget_check(*split, 2, BigInt(7)).ok);         // 98 <= 104
    CHECK_FALSE(range_budget_check(*split, 1, BigInt(104)).ok);  // square blows the range
    CHECK(range_budget_check(*split, 1, BigInt(10)).ok);
    auto rep = range_budget_check(*split, 2, BigInt(9));
    CHECK(rep.to_string() == "violated: needs 162 of 104");
}

TEST_CASE("worked dot product") {
    auto split = tiny_split();
    // x = (1/3, 3/5) payloads (5,9); y = (3/5, 1/3) payloads (9,5); S = 90 -> 6
    FixedVector x = vec(split, {5, 9}), y = vec(split, {9, 5});
    StepCounter sc;
    RnsFixed r = dot_delayed(x, y, &sc);
    CHECK(payload_of(r) == 6);
    CHECK(value_of(r) == Rational::parse("2/5"));
    // M products + M-1 adds + normalization
    CHECK(sc.digit_steps == 2 + 1 + (2 * 4 - 1));
    CHECK(sc.normalizations == 1);

    CHECK(payload_of(dot_sequential(x, y)) == 6);  // exact here as well

    CHECK(is_zero(dot_delayed(vec(split, {0, 0}), y).payload));
    CHECK_THROWS_AS(dot_delayed(x, vec(split, {1, 2, 3})), SystemMismatchError);
}

TEST_CASE("single-element dot equals a fractional multiply") {
    auto split = tiny_split();
    FixedVector x = vec(split, {7}), y = vec(split, {10});
    RnsFixed via_dot = dot_delayed(x, y);
    RnsFixed via_mul = mul(RnsFixed{split, x.payloads[0]}, RnsFixed{split, y.payloads[0]});
    CHECK(eq(via_dot.payload, via_mul.payload));
    CHECK(payload_of(dot_sequential(x, y)) == payload_of(via_mul));
}

TEST_CASE("budget violation raises") {
    auto split = tiny_split();
    FixedVector x = vec(split, {9, 9}), y = vec(split, {9, 9});
    CHECK_THROWS_AS(dot_delayed(x, y), BudgetError);
}

TEST_CASE("delayed beats sequential on the adversarial instance") {
    auto split = tiny_split();
    // both terms round up in the sequential path; delayed rounds once
    FixedVector x = vec(split, {7, 5}), y = vec(split, {10, 5});
    RnsFixed delayed = dot_delayed(x, y);
    RnsFixed seq = dot_sequential(x, y);
    Rational exact = dot_oracle(x, y);  // 95/225 = 19/45
    CHECK(payload_of(delayed) == 6);
    CHECK(payload_of(seq) == 7);
    Rational err_delayed = (value_of(delayed) - exact).abs();
    Rational err_seq = (value_of(seq) - exact).abs();
    CHECK(err_delayed < err_seq);
    CHECK(err_delayed <= Rational(BigInt(1), BigInt(30)));
}

TEST_CASE("delayed dot is the correctly rounded dot, randomized") {
    auto split = roomy_split();
    const BigInt& F = split->frac_range();
    SplitMix64 rng(271828);
    for (int iter = 0; iter < 400; ++iter) {
        const std::size_t M = 2 + rng.next_below(31);
        // budget: M * max^2 <= (R-1)/2 = 4849844
        const std::int64_t max_abs = static_cast<std::int64_t>(
            std::min<std::uint64_t>(380, static_cast<std::uint64_t>(
                                             std::sqrt(4849844.0 / static_cast<double>(M)))));
        std::vector<std::int64_t> xs, ys;
        for (std::size_t i = 0; i < M; ++i) {
            xs.push_back(rng.next_in(-max_abs, max_abs));
            ys.push_back(rng.next_in(-max_abs, max_abs));
        }
        FixedVector x = vec(split, xs), y = vec(split, ys);
        RnsFixed r = dot_delayed(x, y);
        Rational exact = dot_oracle(x, y);
        // equality with the oracle-rounded value: payload = round(F * exact)
        BigInt want = round_div_half_away(exact.num() * F, exact.den());
        CHECK(reverse_int(r.payload) == want);
        // and sequential error dominates
        Rational err_delayed = (value_of(r) - exact).abs();
        Rational err_seq = (value_of(dot_sequential(x, y)) - exact).abs();
        CHECK(err_seq >= err_delayed);
    }
}

TEST_CASE("identity matmul") {
    auto split = roomy_split();
    std::istringstream a_csv("1,0\n0,1\n");
    std::istringstream b_csv("1/3,3/5\n-2/3,0.2\n");
    FixedMatrix identity = encode_matrix(parse_matrix_csv(a_csv), split);
    FixedMatrix b = encode_matrix(parse_matrix_csv(b_csv), split);
    FixedMatrix c = matmul_delayed(identity, b);
    auto vals = decode_matrix(c);
    CHECK(vals[0][0] == Rational::parse("1/3"));
    CHECK(vals[0][1] == Rational::parse("3/5"));
    CHECK(vals[1][0] == Rational::parse("-2/3"));
    CHECK(vals[1][1] == Rational::parse("1/5"));
}

TEST_CASE("2x2 worked matmul") {
    auto split = tiny_split();
    FixedMatrix a{split, 2, 2, {}};
    FixedMatrix b{split, 2, 2, {}};
    for (std::int64_t k : {5, 9, 3, -2}) a.payloads.push_back(forward_int(BigInt(k), split->system()));
    for (std::int64_t k : {9, 5, 4, 6}) b.payloads.push_back(forward_int(BigInt(k), split->system()));
    StepCounter sc;
    FixedMatrix c = matmul_delayed(a, b, &sc);
    CHECK(sc.normalizations == 4);
    // element (0,0): (5*9 + 9*4)/15 = 81/15 = 5.4 -> 5
    CHECK(reverse_int(c.at(0, 0)) == BigInt(5));
    // element-wise against the exact oracle, error within half an ulp
    auto av = decode_matrix(a);
    auto bv = decode_matrix(b);
    auto cv = decode_matrix(c);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational exact = av[i][0] * bv[0][j] + av[i][1] * bv[1][j];
            CHECK((cv[i][j] - exact).abs() <= Rational(BigInt(1), BigInt(30)));
        }
}

TEST_CASE("matmul step accounting") {
    auto split = roomy_split();
    SplitMix64 rng(33);
    const std::size_t M = 4, p = 8;
    FixedMatrix a = random_matrix(split, M, rng);
    FixedMatrix b = random_matrix(split, M, rng);
    StepCounter sc;
    matmul_delayed(a, b, &sc);
    CHECK(sc.normalizations == M * M);
    CHECK(sc.digit_steps == M * M * M + M * M * (M - 1) + M * M * (2 * p - 1));
}

TEST_CASE("matmul budget violation names the element") {
    auto split = tiny_split();
    FixedMatrix a{split, 2, 2, {}};
    for (std::int64_t k : {9, 9, 9, 9}) a.payloads.push_back(forward_int(BigInt(k), split->system()));
    try {
        matmul_delayed(a, a);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
    }
}

TEST_CASE("8x8 wide-range matmul stays within half an ulp everywhere") {
    auto split = FracSplit::make_for_precision(max_system_for_digit_width(9), 32);
    SplitMix64 rng(42);
    FixedMatrix a = random_matrix(split, 8, rng);
    FixedMatrix b = random_matrix(split, 8, rng);
    StepCounter sc;
    FixedMatrix c = matmul_delayed(a, b, &sc);
    CHECK(sc.normalizations == 64);
    const Rational bound(BigInt(1), split->frac_range() * BigInt(2));
    auto av = decode_matrix(a), bv = decode_matrix(b), cv = decode_matrix(c);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Rational exact;
            for (std::size_t k = 0; k < 8; ++k) exact = exact + av[i][k] * bv[k][j];
            CHECK((cv[i][j] - exact).abs() <= bound);
        }
}

TEST_CASE("matmul error dominance over per-element sequential dots") {
    auto split = roomy_split();
    SplitMix64 rng(999);
    FixedMatrix a = random_matrix(split, 5, rng);
    FixedMatrix b = random_matrix(split, 5, rng);
    FixedMatrix c = matmul_delayed(a, b);
    auto av = decode_matrix(a), bv = decode_matrix(b), cv = decode_matrix(c);
    Rational max_delayed, max_seq;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            Rational exact;
            FixedVector row{split, {}}, col{split, {}};
            for (std::size_t k = 0; k < 5; ++k) {
                exact = exact + av[i][k] * bv[k][j];
                row.payloads.push_back(a.at(i, k));
                col.payloads.push_back(b.at(k, j));
            }
            Rational ed = (cv[i][j] - exact).abs();
            Rational es = (value_of(dot_sequential(row, col)) - exact).abs();
            if (ed > max_delayed) max_delayed = ed;
            if (es > max_seq) max_seq = es;
            CHECK(es >= ed);
        }
    CHECK(max_seq >= max_delayed);
}
