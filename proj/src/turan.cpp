#include "outerturan/turan.hpp"

#include "outerturan/errors.hpp"

namespace outerturan {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

namespace {

void require_k(int k)
{
    if (k < 3)
        throw InvalidArgument("cycle length k must be at least 3");
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

Int BoundValue::floor() const { return floor_div(numerator, denominator); }

std::string BoundValue::to_string() const
{
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Int bound_denominator(int k)
{
    require_k(k);
    return checked_sub(checked_sub(checked_mul(k, k), checked_mul(2, k)), 1);
}

Int bound_numerator(int k, int n)
{
    require_k(k);
    Int inner = checked_sub(checked_sub(checked_mul(k, n), k), 1);
    return checked_mul(checked_sub(checked_mul(2, k), 5), inner);
}

BoundValue upper_bound(int k, int n)
{
    require_k(k);
    if (n < 2)
        throw InvalidArgument("vertex count n must be at least 2");
    return BoundValue{bound_numerator(k, n), bound_denominator(k), k, n};
}

BoundCheck bound_holds(Int edges, int k, int n)
{
    BoundValue b = upper_bound(k, n);
    BoundCheck out;
    out.lhs = checked_mul(edges, b.denominator);
    out.rhs = b.numerator;
    out.holds = out.lhs <= out.rhs;
    out.equality = out.lhs == out.rhs;
    return out;
}

bool sharp_residue(int k, int n)
{
    const Int m = bound_denominator(k);
    Int r = (static_cast<Int>(n) - (k - 1)) % m;
    return r == 0;
}

FangFormulaResult fang_value_as_stated(int k, int n)
{
    require_k(k);
    if (n < 2)
        throw InvalidArgument("vertex count n must be at least 2");
    FangFormulaResult out;
    if (n <= k - 1) {
        out.branch = FangBranch::SmallN;
        out.value = 2 * static_cast<Int>(n) - 3;
        return out;
    }
    const Int kn = checked_mul(k, n);
    out.lambda = floor_div(kn - 2 * static_cast<Int>(k) - 1, bound_denominator(k)) + 1;
    const Int base = 2 * static_cast<Int>(n) - out.lambda - 2 * floor_div(out.lambda, k);
    if (out.lambda % k == 0) {
        out.branch = FangBranch::Divisible;
        out.value = base - 3;
    } else {
        out.branch = FangBranch::NonDivisible;
        out.value = base - 2;
    }
    return out;
}

std::string to_string(FangBranch branch)
{
    switch (branch) {
    case FangBranch::SmallN:
        return "small-n";
    case FangBranch::Divisible:
        return "divisible";
    case FangBranch::NonDivisible:
        return "non-divisible";
    }
    return "?";
}

} // namespace outerturan
