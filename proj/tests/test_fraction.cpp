#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rns/fraction.hpp"
#include "support.hpp"

using namespace rns;

namespace {

// {2,3,5,7} with F = 15: the tight worked-example configuration
SplitPtr tiny_split() { return FracSplit::make(RnsSystem::make({2, 3, 5, 7}), {3, 5}); }

// first 8 primes with F = 15: same fractional grid, lots of headroom
SplitPtr roomy_split() { return FracSplit::make(natural_system(8), {3, 5}); }

RnsFixed fx(const SplitPtr& s, std::int64_t payload) {
    return RnsFixed{s, forward_int(BigInt(payload), s->system())};
}

std::int64_t payload_of(const RnsFixed& v) { return reverse_int(v.payload).to_i64(); }

}  // namespace

TEST_CASE("split construction") {
    auto split = tiny_split();
    CHECK(split->frac_range() == BigInt(15));
    CHECK(split->whole_range() == BigInt(14));
    CHECK(split->frac_count() == 2);

    auto by_bits = FracSplit::make_for_precision(natural_system(8), 10);
    CHECK(by_bits->frac_range() >= BigInt(1024));  // 19*17*13 = 4199
    CHECK(by_bits->frac_range() == BigInt(4199));

    CHECK_THROWS_AS(FracSplit::make(RnsSystem::make({2, 3, 5}), {7}), SystemError);
    CHECK_THROWS_AS(FracSplit::make(RnsSystem::make({2, 3, 5}), {3, 3}), SystemError);
    CHECK_THROWS_AS(FracSplit::make_for_precision(RnsSystem::make({2, 3, 5}), 32), SystemError);
}

TEST_CASE("forward fractional conversion") {
    auto split = tiny_split();
    CHECK(is_zero(forward_frac(Rational(0), split).payload));
    CHECK(payload_of(forward_frac(Rational::parse("1/3"), split)) == 5);
    CHECK(payload_of(forward_frac(Rational::parse("0.5"), split)) == 8);  // 7.5 away from zero
    CHECK(payload_of(forward_frac(Rational::parse("-0.5"), split)) == -8);
    CHECK(payload_of(forward_frac(Rational::parse("-1/5"), split)) == -3);
    CHECK_THROWS_AS(forward_frac(Rational::parse("7"), split), RangeError);  // 7*15 > 104
}

TEST_CASE("reverse fractional conversion") {
    auto split = tiny_split();
    CHECK(reverse_frac(RnsFixed::zero(split)) == Rational(0));
    CHECK(reverse_frac(fx(split, 5)) == Rational::parse("1/3"));
    CHECK(reverse_frac(fx(split, -7)) == Rational::parse("-7/15"));
    CHECK(reverse_frac(fx(split, -7)).to_decimal(4) == "-0.4667");
}

TEST_CASE("fractional add, sub, integer multiply are exact single steps") {
    auto split = tiny_split();
    StepCounter sc;
    RnsFixed third = fx(split, 5), fifth = fx(split, 3);
    CHECK(payload_of(add(third, fifth, &sc)) == 8);
    CHECK(sc.digit_steps == 1);
    CHECK(payload_of(add(third, RnsFixed::zero(split)))== 5);
    CHECK(payload_of(sub(third, fx(split, 10))) == -5);  // 1/3 - 2/3
    CHECK(payload_of(mul_int(third, 3)) == 15);          // exactly 1.0
    CHECK(payload_of(mul_int(fx(split, 2), -4)) == -8);
    CHECK(payload_of(mul_int(third, RnsInt::from_i64(split->system(), 3))) == 15);
    sc.reset();
    mul_int(third, 3, &sc);
    CHECK(sc.digit_steps == 1);
}

TEST_CASE("split mismatch is rejected") {
    auto a = tiny_split();
    auto b = FracSplit::make(RnsSystem::make({2, 3, 5, 7}), {7});
    CHECK_THROWS_AS(add(RnsFixed::zero(a), RnsFixed::zero(b)), SystemMismatchError);
}

TEST_CASE("scale_by_F worked examples") {
    auto split = tiny_split();
    auto sys = split->system();
    StepCounter sc;
    CHECK(is_zero(scale_by_F(RnsInt::zero(sys), split, &sc).payload));
    CHECK(sc.digit_steps == 2 * 4 - 1);
    CHECK(sc.normalizations == 1);

    CHECK(payload_of(scale_by_F(forward_int(BigInt(70), sys), split)) == 5);
    CHECK(payload_of(scale_by_F(forward_int(BigInt(45), sys), split)) == 3);
    CHECK(payload_of(scale_by_F(forward_int(BigInt(-70), sys), split)) == -5);
    CHECK(payload_of(scale_by_F(forward_int(BigInt(-45), sys), split)) == -3);
    // exact multiples never round
    for (std::int64_t k = -6; k <= 6; ++k)
        CHECK(payload_of(scale_by_F(forward_int(BigInt(k * 15), sys), split)) == k);
}

TEST_CASE("scale_by_F equals the rounded oracle on every in-range value") {
    auto split = tiny_split();
    auto sys = split->system();
    for (std::int64_t z = -104; z <= 104; ++z) {
        BigInt expected = round_div_half_away(BigInt(z), BigInt(15));
        CHECK(reverse_int(scale_by_F(forward_int(BigInt(z), sys), split).payload) == expected);
    }
}

TEST_CASE("fractional multiply") {
    auto split = tiny_split();
    StepCounter sc;
    // (7/15)*(10/15) = 14/45, payload product 70 -> 5 after rounding
    RnsFixed r = mul(fx(split, 7), fx(split, 10), &sc);
    CHECK(payload_of(r) == 5);
    CHECK(sc.digit_steps == 2 * 4);
    CHECK(sc.normalizations == 1);
    // |5/15 - 14/45| = 1/45 <= 1/(2*15)
    Rational err = (reverse_frac(r) - Rational::parse("14/45")).abs();
    CHECK(err <= Rational(BigInt(1), BigInt(30)));

    // (5/15)*(9/15) = 1/5 exactly
    CHECK(payload_of(mul(fx(split, 5), fx(split, 9))) == 3);
    // identity: 1.0 has payload F; X*F must stay inside the signed range,
    // which caps X at 6 on the 210-range system
    RnsFixed one = RnsFixed::one(split);
    CHECK(payload_of(mul(fx(split, 6), one)) == 6);
    auto roomy = roomy_split();
    CHECK(payload_of(mul(fx(roomy, 12345), RnsFixed::one(roomy))) == 12345);
}

TEST_CASE("multiply stays within half an ulp, exhaustive over the valid grid") {
    auto split = tiny_split();
    const Rational bound(BigInt(1), BigInt(30));
    int cases = 0;
    for (std::int64_t x = -104; x <= 104; ++x) {
        for (std::int64_t y = -104; y <= 104; ++y) {
            if (std::abs(x * y) > 104) continue;
            RnsFixed r = mul(fx(split, x), fx(split, y));
            Rational exact = Rational(BigInt(x), BigInt(15)) * Rational(BigInt(y), BigInt(15));
            CHECK((reverse_frac(r) - exact).abs() <= bound);
            ++cases;
        }
    }
    CHECK(cases > 2000);
}

TEST_CASE("multiply sign symmetry is exact") {
    auto split = roomy_split();
    SplitMix64 rng(9);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t x = rng.next_in(-2000, 2000), y = rng.next_in(-2000, 2000);
        RnsFixed pos = mul(fx(split, x), fx(split, y));
        RnsFixed flipped = mul(fx(split, -x), fx(split, y));
        CHECK(payload_of(pos) == -payload_of(flipped));
    }
}

TEST_CASE("randomized multiply against the rational oracle") {
    auto split = FracSplit::make_for_precision(max_system_for_digit_width(9), 32);
    const BigInt& F = split->frac_range();
    const Rational bound(BigInt(1), F * BigInt(2));
    SplitMix64 rng(77);
    for (int iter = 0; iter < 2000; ++iter) {
        BigInt x = testing::random_signed(rng, F);  // values within [-1, 1]
        BigInt y = testing::random_signed(rng, F);
        RnsFixed ex{split, forward_int(x, split->system())};
        RnsFixed ey{split, forward_int(y, split->system())};
        RnsFixed r = mul(ex, ey);
        Rational exact = Rational(x, F) * Rational(y, F);
        CHECK((reverse_frac(r) - exact).abs() <= bound);
    }
}

TEST_CASE("division worked examples need headroom") {
    auto split = roomy_split();
    StepCounter sc;
    DivStats stats;
    // (6/15)/(3/15) = 2 exactly
    RnsFixed q = div(fx(split, 6), fx(split, 3), &sc, &stats);
    CHECK(payload_of(q) == 30);
    CHECK(stats.iterations <= 4);  // ceil(log2(bitlen(15))) + 2

    // (5/15)/(9/15) = 5/9, correctly rounded payload is 8
    q = div(fx(split, 5), fx(split, 9), nullptr, &stats);
    CHECK(payload_of(q) == 8);
    CHECK(stats.iterations <= 4);

    // a / 1.0 stays within one ulp
    RnsFixed one = RnsFixed::one(split);
    for (std::int64_t a : {-31, -1, 0, 1, 7, 8, 29}) {
        q = div(fx(split, a), one, nullptr, &stats);
        CHECK(std::abs(payload_of(q) - a) <= 1);
        CHECK(stats.iterations <= 4);
    }

    CHECK_THROWS_AS(div(fx(split, 5), RnsFixed::zero(split)), DivideByZeroError);
    // the 210-range system cannot hold the F^2 iteration products
    auto tiny = tiny_split();
    CHECK_THROWS_AS(div(fx(tiny, 6), fx(tiny, 3)), RangeError);
}

TEST_CASE("division randomized error bound, small fractional range") {
    auto split = roomy_split();  // F = 15, R ~ 9.7e6
    const Rational bound(BigInt(2), BigInt(15));
    SplitMix64 rng(5150);
    const int cap = 4;
    int checked = 0;
    while (checked < 1000) {
        // stay inside the guard-scale feasibility band of the 9.7e6 range:
        // modest dividends and quotients, divisor away from the grid floor
        std::int64_t b = rng.next_in(-120, 120);
        if (std::abs(b) < 15) continue;
        std::int64_t a = rng.next_in(-3 * std::abs(b), 3 * std::abs(b));
        if (std::abs(a) > 120) a %= 120;
        Rational exact = Rational(BigInt(a), BigInt(1)) / Rational(BigInt(b), BigInt(1));
        DivStats stats;
        RnsFixed q = div(fx(split, a), fx(split, b), nullptr, &stats);
        CHECK((reverse_frac(q) - exact).abs() <= bound);
        CHECK(stats.iterations <= cap);
        ++checked;
    }
}

TEST_CASE("division randomized error bound, wide fractional range") {
    auto split = FracSplit::make_for_precision(max_system_for_digit_width(9), 32);
    const BigInt& F = split->frac_range();  // ~2^36
    const Rational bound(BigInt(2), F);
    const int cap =
        static_cast<int>(std::ceil(std::log2(static_cast<double>(F.bit_length())))) + 2;
    SplitMix64 rng(60902);
    int checked = 0;
    while (checked < 400) {
        BigInt a = testing::random_signed(rng, F);
        BigInt b = testing::random_signed(rng, F);
        if (b.is_zero()) continue;
        RnsFixed ea{split, forward_int(a, split->system())};
        RnsFixed eb{split, forward_int(b, split->system())};
        DivStats stats;
        RnsFixed q = div(ea, eb, nullptr, &stats);
        Rational exact = Rational(a, BigInt(1)) / Rational(b, BigInt(1));
        CHECK((reverse_frac(q) - exact).abs() <= bound);
        CHECK(stats.iterations <= cap);
        ++checked;
    }
}

TEST_CASE("all-fractional split: no whole lanes") {
    // F = R: representable values live in (-1/2, 1/2) and every quotient
    // floor(|Z|/F) is zero, so scaling always rounds to zero
    auto sys = RnsSystem::make({2, 3, 5, 7});
    auto split = FracSplit::make(sys, {2, 3, 5, 7});
    CHECK(split->whole_range() == BigInt(1));
    RnsFixed third = forward_frac(Rational::parse("1/3"), split);
    CHECK(payload_of(third) == 70);
    RnsFixed seventh = forward_frac(Rational::parse("1/7"), split);
    CHECK(reverse_frac(add(third, seventh)) == Rational::parse("10/21"));
    CHECK(reverse_frac(sub(third, third)) == Rational(0));
    // +1/2 is the unrepresentable boundary of the asymmetric signed range
    CHECK_THROWS_AS(forward_frac(Rational::parse("1/2"), split), RangeError);
    for (std::int64_t z : {-104, -53, -1, 0, 1, 52, 104})
        CHECK(is_zero(scale_by_F(forward_int(BigInt(z), sys), split).payload));
}

TEST_CASE("denominator count") {
    CHECK(denominator_count(*FracSplit::make(RnsSystem::make({2, 3}), {3})) == BigInt(1));
    auto f15 = tiny_split();
    CHECK(denominator_count(*f15) == BigInt(3));
    auto f105 = FracSplit::make(RnsSystem::make({2, 3, 5, 7}), {3, 5, 7});
    CHECK(denominator_count(*f105) == BigInt(7));

    // matches explicit divisor enumeration of F (excluding 1)
    for (auto split : {f15, f105}) {
        std::int64_t F = split->frac_range().to_i64();
        std::int64_t divisors = 0;
        for (std::int64_t d = 2; d <= F; ++d)
            if (F % d == 0) ++divisors;
        CHECK(denominator_count(*split) == BigInt(divisors));
    }
}

TEST_CASE("exactness of add and mul_int against the rational oracle") {
    auto split = roomy_split();
    SplitMix64 rng(31337);
    const BigInt& half = split->system()->signed_max();
    for (int iter = 0; iter < 3000; ++iter) {
        std::int64_t x = rng.next_in(-100000, 100000);
        std::int64_t y = rng.next_in(-100000, 100000);
        std::int64_t k = rng.next_in(-30, 30);
        RnsFixed ex = fx(split, x), ey = fx(split, y);
        CHECK(reverse_frac(add(ex, ey)) ==
              Rational(BigInt(x), BigInt(15)) + Rational(BigInt(y), BigInt(15)));
        CHECK(reverse_frac(sub(ex, ey)) ==
              Rational(BigInt(x), BigInt(15)) - Rational(BigInt(y), BigInt(15)));
        if (BigInt(x * k).abs() <= half)
            CHECK(reverse_frac(mul_int(ex, k)) ==
                  Rational(BigInt(x * k), BigInt(15)));
    }
}
