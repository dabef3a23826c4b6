#include "hcf/maps.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hcf {

namespace {

void require_index(int i, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (i < 0 || i > m)
        throw std::invalid_argument("index i=" + std::to_string(i) +
                                    " out of range [0," + std::to_string(m) + "]");
}

std::vector<Rational> normalized_first_column(const IntMatrix& product) {
    const std::size_t n = product.size();
    const Integer& bottom = product.at(n - 1, 0);
    if (sgn(bottom) == 0)
        throw std::domain_error("degenerate input: product has zero bottom-left entry");
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = Rational(product.at(n - 1 - i, 0), bottom);
    return values;
}

// One downward step of the shift identity on a whole vector:
// r_j(x-1) = r_j(x) - r_{j-1}(x), applied top index first.
void shift_down(std::vector<Rational>& values) {
    for (std::size_t j = values.size() - 1; j >= 1; --j)
        values[j] -= values[j - 1];
}

}  // namespace

const Rational& HCFVector::r(int i) const {
    require_index(i, m);
    return values[static_cast<std::size_t>(i)];
}

HCFVector cf_vector(const Rational& x, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const CFExpansion cf = expand(x);
    const IntMatrix product = cf_product(cf, m);
    return HCFVector{m, normalized_first_column(product)};
}

Rational r_value(const Rational& x, int i, int m) {
    require_index(i, m);
    return cf_vector(x, m).values[static_cast<std::size_t>(i)];
}

HCFVector cf_vector_via_shift(const Rational& x, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (x >= Rational(1)) return cf_vector(x, m);
    const Integer steps = (Rational(1) - x).ceil();
    if (!steps.fits_slong_p())
        throw std::invalid_argument("input is too negative to shift into [1,2)");
    const long shifts = steps.get_si();
    HCFVector v = cf_vector(x + Rational(steps), m);
    for (long step = 0; step < shifts; ++step) shift_down(v.values);
    return v;
}

Rational r_via_shift(const Rational& x, int i, int m) {
    require_index(i, m);
    return cf_vector_via_shift(x, m).values[static_cast<std::size_t>(i)];
}

HCFVector reciprocal_vector(const HCFVector& v) {
    const std::size_t n = v.values.size();
    if (n != static_cast<std::size_t>(v.m) + 1)
        throw std::invalid_argument("malformed vector");
    const Rational& top = v.values[n - 1];
    if (top.is_zero()) throw std::domain_error("top entry r_m is zero");
    for (const Rational& entry : v.values)
        if (entry.sign() <= 0)
            throw std::invalid_argument("vector does not come from an x >= 1 (nonpositive entry)");
    HCFVector out{v.m, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) out.values[i] = v.values[n - 1 - i] / top;
    return out;
}

Enclosure enclose(const RealInput& x, int i, int m, const Rational& eps,
                  const EncloseOptions& options) {
    require_index(i, m);
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
    if (!x.is_irrational())
        throw std::domain_error(
            "input is a finite continued fraction; evaluate it exactly instead of enclosing");

    DigitStream digits = x.stream();
    const Integer c1 = *digits.next();
    long shifts = 0;
    if (c1 < 0) {
        const Integer s = 1 - c1;
        if (!s.fits_slong_p())
            throw std::invalid_argument("input is too negative to shift into [1,2)");
        shifts = s.get_si();
    }
    // After n downward interval shifts the width can grow by at most 2^n,
    // so a per-component budget of eps / 2^(n+1) keeps the result <= eps.
    const Rational budget =
        shifts == 0 ? eps : eps / pow(Rational(2), shifts + 1);
    const int lowest_needed = shifts >= i ? 0 : i - static_cast<int>(shifts);

    IntMatrix product = lambda_matrix(m, c1 + shifts);
    long depth = 1;
    std::vector<Rational> odd_vec = normalized_first_column(product);
    std::vector<Rational> lo, hi;
    for (;;) {
        if (depth + 1 > options.max_depth) {
            std::ostringstream msg;
            msg << "enclosure did not reach width " << eps.to_fraction_string()
                << " within " << options.max_depth << " digits";
            throw std::runtime_error(msg.str());
        }
        product = product * lambda_matrix(m, *digits.next());
        ++depth;  // even: convergent above the target
        const std::vector<Rational> even_vec = normalized_first_column(product);

        lo = odd_vec;
        hi = even_vec;
        bool tight = true;
        for (int k = lowest_needed; k <= i; ++k) {
            auto idx = static_cast<std::size_t>(k);
            if (lo[idx] > hi[idx]) std::swap(lo[idx], hi[idx]);
            if (hi[idx] - lo[idx] > budget) {
                tight = false;
                break;
            }
        }
        if (tight) break;

        product = product * lambda_matrix(m, *digits.next());
        ++depth;  // back to odd
        odd_vec = normalized_first_column(product);
    }

    for (long step = 0; step < shifts; ++step) {
        for (std::size_t j = lo.size() - 1; j >= 1; --j) {
            Rational next_lo = lo[j] - hi[j - 1];
            Rational next_hi = hi[j] - lo[j - 1];
            lo[j] = std::move(next_lo);
            hi[j] = std::move(next_hi);
        }
    }
    const auto idx = static_cast<std::size_t>(i);
    return Enclosure{lo[idx], hi[idx], depth};
}

BoundsReport check_ratio_bounds(const Rational& x, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (x < Rational(1)) throw std::invalid_argument("x must be >= 1");
    const HCFVector v = cf_vector(x, m);
    const Integer n = x.floor();
    const bool integral = x.is_integer();
    for (int i = 1; i <= m; ++i) {
        const Rational ratio = v.r(i) / v.r(i - 1);
        const Rational lower(n - 1 + i, Integer(i));
        const Rational upper(n + i, Integer(i));
        BoundsReport fail;
        fail.ok = false;
        std::ostringstream msg;
        msg << "x=" << x.to_fraction_string() << " m=" << m << " i=" << i
            << " ratio=" << ratio.to_fraction_string();
        if (integral) {
            if (ratio != lower) {
                msg << " != " << lower.to_fraction_string() << " (integer case)";
                fail.detail = msg.str();
                return fail;
            }
        } else if (!(lower < ratio && ratio < upper)) {
            msg << " outside (" << lower.to_fraction_string() << ","
                << upper.to_fraction_string() << ")";
            fail.detail = msg.str();
            return fail;
        }
    }
    return {};
}

BoundsReport check_value_bounds(const Rational& x, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (x < Rational(1)) throw std::invalid_argument("x must be >= 1");
    const HCFVector v = cf_vector(x, m);
    const Integer a1 = x.floor();
    const bool integral = x.is_integer();
    for (int j = 0; j <= m; ++j) {
        for (int k = j + 1; k <= m; ++k) {
            const Rational ratio = v.r(k) / v.r(j);
            const Rational lower(multichoose(a1, k), multichoose(a1, j));
            const Rational upper(multichoose(a1 + 1, k), multichoose(a1 + 1, j));
            const bool lower_ok = integral ? ratio == lower : ratio > lower;
            if (!lower_ok || !(ratio < upper)) {
                BoundsReport fail;
                fail.ok = false;
                std::ostringstream msg;
                msg << "x=" << x.to_fraction_string() << " m=" << m << " j=" << j
                    << " k=" << k << ": " << lower.to_fraction_string()
                    << (integral ? " = " : " < ") << ratio.to_fraction_string()
                    << " < " << upper.to_fraction_string() << " violated";
                fail.detail = msg.str();
                return fail;
            }
        }
    }
    return {};
}

}  // namespace hcf
