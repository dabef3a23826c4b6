#include "hcf/lambda.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hcf {

namespace {

void require_order(int m) {
    if (m < 1) throw std::invalid_argument("matrix order parameter m must be >= 1");
}

// Below this many digits the blocked product is pure overhead.
constexpr std::size_t kMinDigitsForBlocks = 64;
constexpr std::size_t kMinBlockLen = 16;

}  // namespace

IntMatrix lambda_matrix(int m, const Integer& a) {
    require_order(m);
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + i < n; ++j)
            out.at(i, j) = multichoose(a, m - static_cast<long>(i + j));
    return out;
}

GeneratorTriple generators(int m) {
    require_order(m);
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    GeneratorTriple g{IntMatrix(n), IntMatrix(n), IntMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j >= i) g.R.at(i, j) = 1;
            if (j <= i) g.L.at(i, j) = 1;
            if (i + j + 1 == n) g.W.at(i, j) = 1;
        }
    return g;
}

IntMatrix r_inverse(int m) {
    require_order(m);
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    IntMatrix out = IntMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) out.at(i, i + 1) = -1;
    return out;
}

IntMatrix cf_product_serial(std::span<const Integer> digits, int m) {
    require_order(m);
    if (digits.empty()) throw std::invalid_argument("empty digit string");
    IntMatrix acc = lambda_matrix(m, digits[0]);
    for (std::size_t k = 1; k < digits.size(); ++k)
        acc = acc * lambda_matrix(m, digits[k]);
    return acc;
}

IntMatrix cf_product_blocked(std::span<const Integer> digits, int m) {
    require_order(m);
    if (digits.empty()) throw std::invalid_argument("empty digit string");
#ifdef _OPENMP
    const std::size_t n = digits.size();
    std::size_t blocks = std::min<std::size_t>(
        static_cast<std::size_t>(omp_get_max_threads()), n / kMinBlockLen);
    if (n < kMinDigitsForBlocks || blocks < 2) return cf_product_serial(digits, m);
    std::vector<IntMatrix> part(blocks);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < static_cast<long>(blocks); ++b) {
        const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
        const std::size_t hi = n * (static_cast<std::size_t>(b) + 1) / blocks;
        part[static_cast<std::size_t>(b)] = cf_product_serial(digits.subspan(lo, hi - lo), m);
    }
    IntMatrix acc = std::move(part[0]);
    for (std::size_t b = 1; b < blocks; ++b) acc = acc * part[b];
    return acc;
#else
    return cf_product_serial(digits, m);
#endif
}

IntMatrix cf_product(std::span<const Integer> digits, int m) {
    return digits.size() >= kMinDigitsForBlocks ? cf_product_blocked(digits, m)
                                                : cf_product_serial(digits, m);
}

IntMatrix cf_product(const CFExpansion& cf, int m) {
    return cf_product(std::span<const Integer>(cf.digits()), m);
}

ReversalReport check_ratio_reversal(std::span<const Rational> x,
                                    std::span<const Rational> y,
                                    const Integer& a) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("vectors must have equal length >= 2");
    if (a < 1) throw std::invalid_argument("digit a must be >= 1");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].sign() <= 0 || y[i].sign() <= 0)
            throw std::invalid_argument("vector entries must be positive");

    const int m = static_cast<int>(x.size()) - 1;
    ReversalReport report;
    report.precondition_ok = true;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i] / x[i + 1] < y[i] / y[i + 1]) {
            report.precondition_ok = false;
            report.violating_index = i + 1;
            report.detail = "precondition fails at i=" + std::to_string(i + 1);
            return report;
        }
    }
    report.strict_case = x[0] / x[1] > y[0] / y[1];

    const IntMatrix lam = lambda_matrix(m, a);
    auto apply = [&](std::span<const Rational> v) {
        std::vector<Rational> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                out[i] += Rational(lam.at(i, j)) * v[j];
        return out;
    };
    const std::vector<Rational> xp = apply(x);
    const std::vector<Rational> yp = apply(y);

    report.holds = true;
    report.strict_holds = true;
    for (std::size_t i = 0; i + 1 < xp.size(); ++i) {
        const Rational lhs = yp[i] / yp[i + 1];
        const Rational rhs = xp[i] / xp[i + 1];
        if (lhs < rhs) {
            report.holds = false;
            report.strict_holds = false;
            report.violating_index = i + 1;
            std::ostringstream msg;
            msg << "reversed inequality fails at i=" << (i + 1) << ": "
                << lhs.to_fraction_string() << " < " << rhs.to_fraction_string();
            report.detail = msg.str();
            return report;
        }
        if (lhs == rhs) report.strict_holds = false;
    }
    return report;
}

}  // namespace hcf
