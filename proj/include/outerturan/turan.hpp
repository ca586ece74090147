#pragma once

#include <cstdint>
#include <string>

namespace outerturan {

using Int = std::int64_t;

/// Overflow-checked arithmetic; throws OverflowError instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// (2k-5)(kn-k-1) / (k^2-2k-1), kept unreduced.
struct BoundValue {
    Int numerator = 0;
    Int denominator = 1;
    int k = 0;
    int n = 0;

    bool is_integer() const { return numerator % denominator == 0; }
    Int floor() const;
    std::string to_string() const;
};

/// k^2 - 2k - 1
Int bound_denominator(int k);
/// (2k - 5)(kn - k - 1)
Int bound_numerator(int k, int n);

/// Throws InvalidArgument when k < 3 or n < 2.
BoundValue upper_bound(int k, int n);

struct BoundCheck {
    bool holds = false;
    bool equality = false;
    Int lhs = 0; // e (k^2 - 2k - 1)
    Int rhs = 0; // (2k - 5)(kn - k - 1)
};

/// Integer form of e <= upper_bound(k, n).
BoundCheck bound_holds(Int edges, int k, int n);

/// n = k - 1 (mod k^2 - 2k - 1)
bool sharp_residue(int k, int n);

enum class FangBranch { SmallN, Divisible, NonDivisible };

/// Literal evaluation of the transcribed closed formula for ex_OP(n, C_k).
/// Known to disagree with the sharp bound and with exhaustive search, so it
/// is reported alongside them and never used as a reference value.
struct FangFormulaResult {
    Int lambda = 0; // 0 on the small-n branch
    Int value = 0;
    FangBranch branch = FangBranch::SmallN;
};

FangFormulaResult fang_value_as_stated(int k, int n);

std::string to_string(FangBranch branch);

} // namespace outerturan
