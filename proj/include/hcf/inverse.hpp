#pragma once

#include "hcf/maps.hpp"

namespace hcf {

struct InverseResult {
    Rational x_hat;
    Rational residual;  // r(x_hat, i, m) - y, |residual| <= eps
    long iterations = 0;
    bool exact_hit = false;  // residual is exactly zero
    Rational bracket_lo;     // final bisection bracket
    Rational bracket_hi;
};

struct InvertOptions {
    long max_iterations = 0;  // 0 = derive from eps (10 * bits + 64)
};

/// Solves r(x, i, m) = y for x >= 0 by bisection, using that r is
/// strictly increasing on [0, inf) with r(0) = 0 and r(n) =
/// multichoose(n, i) at integers. The tolerance is on the value
/// residual, not on argument distance. Exact arithmetic throughout;
/// every probe is a full evaluation, cached per call.
InverseResult invert(const Rational& y, int i, int m, const Rational& eps,
                     const InvertOptions& options = {});

}  // namespace hcf
