#include "rns/linalg.hpp"

namespace rns {

namespace {

void require_same_shape(const FixedVector& x, const FixedVector& y) {
    if (!x.split->same_as(*y.split))
        throw SystemMismatchError("vectors use different fractional splits");
    if (x.size() != y.size())
        throw SystemMismatchError("vector lengths differ: " + std::to_string(x.size()) + " vs " +
                                  std::to_string(y.size()));
}

}  // namespace

std::string RangeBudgetReport::to_string() const {
    return std::string(ok ? "ok" : "violated") + ": needs " + required.to_decimal() +
           " of " + available.to_decimal();
}

RangeBudgetReport range_budget_check(const FracSplit& split, std::size_t terms,
                                     const BigInt& max_abs) {
    RangeBudgetReport r;
    r.required = BigInt(static_cast<std::int64_t>(terms)) * max_abs * max_abs;
    r.available = split.system()->signed_max();
    r.ok = r.required <= r.available;
    return r;
}

// exact per-instance headroom: sum of |x_i * y_i| must stay in range;
// the conservative planning form (terms * max^2) rejects workable data
static void require_dot_headroom(const FixedVector& x, const FixedVector& y,
                                 const std::string& where) {
    BigInt sum;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += (reverse_int(x.payloads[i]) * reverse_int(y.payloads[i])).abs();
    const BigInt& limit = x.split->system()->signed_max();
    if (sum > limit)
        throw BudgetError(where + " range budget violated: needs " + sum.to_decimal() + " of " +
                          limit.to_decimal());
}

RnsFixed dot_delayed(const FixedVector& x, const FixedVector& y, StepCounter* sc) {
    require_same_shape(x, y);
    require_dot_headroom(x, y, "dot product");

    RnsInt acc = RnsInt::zero(x.split->system());
    for (std::size_t i = 0; i < x.size(); ++i) {
        RnsInt term = mul(x.payloads[i], y.payloads[i], sc);
        acc = i == 0 ? std::move(term) : add(acc, term, sc);
    }
    return scale_by_F(acc, x.split, sc);
}

RnsFixed dot_sequential(const FixedVector& x, const FixedVector& y, StepCounter* sc) {
    require_same_shape(x, y);
    RnsFixed acc = RnsFixed::zero(x.split);
    for (std::size_t i = 0; i < x.size(); ++i) {
        RnsFixed xi{x.split, x.payloads[i]};
        RnsFixed yi{y.split, y.payloads[i]};
        RnsFixed term = mul(xi, yi, sc);
        acc = i == 0 ? std::move(term) : add(acc, term, sc);
    }
    return acc;
}

FixedMatrix matmul_delayed(const FixedMatrix& a, const FixedMatrix& b, StepCounter* sc) {
    if (!a.split->same_as(*b.split))
        throw SystemMismatchError("matrices use different fractional splits");
    if (a.cols != b.rows)
        throw SystemMismatchError("inner dimensions differ: " + std::to_string(a.cols) + " vs " +
                                  std::to_string(b.rows));

    // exact per-element headroom so a violation names the offending output
    std::vector<BigInt> av(a.payloads.size()), bv(b.payloads.size());
    for (std::size_t i = 0; i < a.payloads.size(); ++i) av[i] = reverse_int(a.payloads[i]);
    for (std::size_t i = 0; i < b.payloads.size(); ++i) bv[i] = reverse_int(b.payloads[i]);
    const BigInt& limit = a.split->system()->signed_max();

    FixedMatrix out;
    out.split = a.split;
    out.rows = a.rows;
    out.cols = b.cols;
    out.payloads.reserve(out.rows * out.cols);
    for (std::size_t i = 0; i < out.rows; ++i) {
        for (std::size_t j = 0; j < out.cols; ++j) {
            BigInt sum;
            for (std::size_t k = 0; k < a.cols; ++k)
                sum += (av[i * a.cols + k] * bv[k * b.cols + j]).abs();
            if (sum > limit)
                throw BudgetError("matmul range budget at element (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") violated: needs " + sum.to_decimal() +
                                  " of " + limit.to_decimal());
            RnsInt acc = RnsInt::zero(a.split->system());
            for (std::size_t k = 0; k < a.cols; ++k) {
                RnsInt term = mul(a.at(i, k), b.at(k, j), sc);
                acc = k == 0 ? std::move(term) : add(acc, term, sc);
            }
            out.payloads.push_back(scale_by_F(acc, a.split, sc).payload);
        }
    }
    return out;
}

}  // namespace rns
