#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcf/cf.hpp"
#include "hcf/matrix.hpp"

namespace hcf {

/// The (m+1)x(m+1) matrix with (i,j) entry multichoose(a, m+2-i-j)
/// (1-based indices); equals R^a W for a >= 0 and is defined by the
/// same formula for every integer a.
IntMatrix lambda_matrix(int m, const Integer& a);

struct GeneratorTriple {
    IntMatrix R;  // upper triangular, all ones
    IntMatrix L;  // lower triangular, all ones
    IntMatrix W;  // anti-diagonal permutation
};

GeneratorTriple generators(int m);

/// Explicit inverse of R (unit upper bidiagonal with -1 off-diagonal).
IntMatrix r_inverse(int m);

/// Product Lambda(c1) Lambda(c2) ... Lambda(cn) along the given digits,
/// exactly as written: no normalization, representation-dependent.
/// Left-to-right serial fold; the reference implementation.
IntMatrix cf_product_serial(std::span<const Integer> digits, int m);

/// Same product computed by splitting the digit string into blocks,
/// multiplying blocks concurrently (OpenMP), and folding the block
/// results in order. Bit-identical to the serial fold by associativity.
IntMatrix cf_product_blocked(std::span<const Integer> digits, int m);

/// Dispatching entry point: blocked for long digit strings when OpenMP
/// is available, serial otherwise.
IntMatrix cf_product(std::span<const Integer> digits, int m);
IntMatrix cf_product(const CFExpansion& cf, int m);

/// Outcome of one ratio-reversal check (consecutive-ratio inequalities
/// before and after multiplication by a Lambda matrix).
struct ReversalReport {
    bool precondition_ok = false;  // x_i/x_{i+1} >= y_i/y_{i+1} for all i
    bool holds = false;            // y'_i/y'_{i+1} >= x'_i/x'_{i+1} for all i
    bool strict_case = false;      // hypothesis x_1/x_2 > y_1/y_2 was strict
    bool strict_holds = false;     // all reversed inequalities strict
    std::optional<std::size_t> violating_index;  // 1-based, first failure
    std::string detail;
};

/// Multiplies both vectors by lambda_matrix(m, a) (m+1 = vector length)
/// and reports whether the consecutive-ratio inequalities reverse.
/// Entries must be positive and a >= 1; a violated ratio ordering is
/// reported as a precondition failure, not a property failure.
ReversalReport check_ratio_reversal(std::span<const Rational> x,
                                    std::span<const Rational> y,
                                    const Integer& a);

}  // namespace hcf
