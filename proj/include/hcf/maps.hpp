#pragma once

#include <string>
#include <vector>

#include "hcf/cf.hpp"
#include "hcf/lambda.hpp"

namespace hcf {

/// The normalized vector CF_m(x): values[i] = r_{i,m}(x), with
/// values[0] = 1 always. For x > 0 every entry is positive; for x >= 1
/// the entries are nondecreasing in i.
struct HCFVector {
    int m = 0;
    std::vector<Rational> values;  // index i = r_{i,m}

    const Rational& r(int i) const;
};

/// First column of the Lambda product along the canonical expansion of
/// x, divided by its bottom entry. r is a function of the value x, not
/// of any particular digit representation.
HCFVector cf_vector(const Rational& x, int m);

/// r_{i,m}(x), 0 <= i <= m.
Rational r_value(const Rational& x, int i, int m);

/// The same vector computed by the shift route: evaluate at x + n >= 1
/// by the direct product (positive digits only), then apply
/// r_i(x-1) = r_i(x) - r_{i-1}(x) componentwise n times. Equal to
/// cf_vector for every rational x; kept as an independent route.
HCFVector cf_vector_via_shift(const Rational& x, int m);
Rational r_via_shift(const Rational& x, int i, int m);

/// Maps the vector of some x >= 1 to the vector of 1/x via
/// r_{i,m}(1/x) = r_{m-i,m}(x) / r_{m,m}(x).
HCFVector reciprocal_vector(const HCFVector& v);

/// Exact rational interval certified to contain r_{i,m}(x) for an
/// irrational x; both endpoints are r-values at bracketing convergents.
struct Enclosure {
    Rational lo;
    Rational hi;
    long witness_depth = 0;  // digits consumed

    Rational width() const { return hi - lo; }
};

struct EncloseOptions {
    long max_depth = 10000;
};

/// Brackets r_{i,m}(x) between values at consecutive convergent pairs,
/// tightening until the width is <= eps. For x < 0 the bracketing runs
/// at the shifted input x + n >= 1 with a reduced per-component budget
/// and the result is carried down by exact interval shifts.
Enclosure enclose(const RealInput& x, int i, int m, const Rational& eps,
                  const EncloseOptions& options = {});

struct BoundsReport {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

/// Digit-ratio bounds for x >= 1 with n = floor(x): the ratio
/// r_{i,m}/r_{i-1,m} equals (n-1+i)/i at integers and lies strictly
/// between (n-1+i)/i and (n+i)/i otherwise. Exact, no tolerance.
BoundsReport check_ratio_bounds(const Rational& x, int m);

/// Value-ratio bounds for x >= 1 with a1 = floor(x): for all
/// 0 <= j < k <= m, mc(a1,k)/mc(a1,j) <= r_k/r_j < mc(a1+1,k)/mc(a1+1,j),
/// the left inequality an equality exactly when x is an integer.
BoundsReport check_value_bounds(const Rational& x, int m);

}  // namespace hcf
