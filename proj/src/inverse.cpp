#include "hcf/inverse.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hcf {

namespace {

long iteration_cap(const Rational& eps) {
    // 10 * (bits of precision requested) + 64
    const Integer inv = eps.reciprocal().abs().ceil();
    const long bits = static_cast<long>(mpz_sizeinbase(inv.get_mpz_t(), 2));
    return 10 * bits + 64;
}

}  // namespace

InverseResult invert(const Rational& y, int i, int m, const Rational& eps,
                     const InvertOptions& options) {
    if (i < 1 || i > m) throw std::invalid_argument("need 1 <= i <= m");
    if (y.sign() < 0) throw std::invalid_argument("y must be >= 0");
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");

    std::map<Rational, Rational> probes;
    auto evaluate_r = [&](const Rational& x) -> const Rational& {
        auto it = probes.find(x);
        if (it == probes.end())
            it = probes.emplace(x, r_value(x, i, m)).first;
        return it->second;
    };

    if (y.is_zero()) return {Rational(0), Rational(0), 0, true, Rational(0), Rational(0)};

    // Least integer n* with multichoose(n*, i) >= y; valid upper bracket
    // endpoint since r(n) = multichoose(n, i) at integers.
    Integer top = 1;
    while (Rational(multichoose(top, i)) < y) top *= 2;
    Integer lo_n = top / 2, hi_n = top;
    while (lo_n < hi_n) {
        Integer mid = (lo_n + hi_n) / 2;
        if (Rational(multichoose(mid, i)) >= y)
            hi_n = mid;
        else
            lo_n = mid + 1;
    }

    Rational lo(0), hi(Integer(hi_n));
    long iterations = 0;

    auto finish = [&](const Rational& x, const Rational& rx) {
        return InverseResult{x, rx - y, iterations, rx == y, lo, hi};
    };

    {
        const Rational& r_hi = evaluate_r(hi);
        if (r_hi == y) return finish(hi, r_hi);
        // Identity-shaped guess: when the map is close to x |-> x this
        // lands immediately (exactly, for m = 1); otherwise it just
        // tightens the bracket.
        if (y < hi) {
            ++iterations;
            const Rational& probe = evaluate_r(y);
            if ((probe - y).abs() <= eps) return finish(y, probe);
            (probe < y ? lo : hi) = y;
        }
    }

    const long cap = options.max_iterations > 0 ? options.max_iterations : iteration_cap(eps);
    for (;;) {
        // Bracket invariant, checked exactly on every iteration.
        if (evaluate_r(lo) > y || y > evaluate_r(hi))
            throw std::logic_error("bisection bracket lost the target value");
        if (iterations >= cap) {
            std::ostringstream msg;
            msg << "iteration cap " << cap << " exceeded; last bracket ["
                << lo.to_fraction_string() << ", " << hi.to_fraction_string() << "]";
            throw std::runtime_error(msg.str());
        }
        ++iterations;
        const Rational mid = (lo + hi) / Rational(2);
        const Rational& r_mid = evaluate_r(mid);
        if ((r_mid - y).abs() <= eps) return finish(mid, r_mid);
        (r_mid < y ? lo : hi) = mid;
    }
}

}  // namespace hcf
