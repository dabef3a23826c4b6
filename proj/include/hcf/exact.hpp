#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hcf {

/// Arbitrary-precision signed integer. GMP supplies storage and base
/// arithmetic; everything else in the library treats it as an opaque
/// exact integer.
using Integer = mpz_class;

/// Parses a base-10 integer with an optional leading sign.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

/// Exact rational number. Canonical form is maintained as a class
/// invariant: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
/// Comparisons are an exact total order. Values are immutable in spirit
/// (all operations return fresh values); safe to share across threads.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p/q", a bare integer, or a terminating decimal with an
    /// optional exponent ("1.75", "1e-9"); each denotes one exact value.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;

    /// 1/x; reports a domain error on zero.
    Rational reciprocal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or just "p" when the value is an integer.
    std::string to_fraction_string() const;

    /// Fixed-point decimal with `precision` digits after the point,
    /// rounded to nearest (ties away from zero). Presentation only;
    /// nothing in the library consumes this.
    std::string to_decimal_string(int precision) const;

private:
    explicit Rational(mpq_class q) : value_(std::move(q)) {}
    mpq_class value_;
};

/// Generalized binomial coefficient, defined for every integer n:
/// 0 for k < 0, 1 for k = 0, and prod_{i=0}^{k-1}(n - i) / k! for k > 0.
Integer binomial(const Integer& n, long k);

/// n multichoose k = binomial(n + k - 1, k). For n >= 1, k >= 0 this
/// counts k-multisets drawn from an n-element set; the same formula is
/// used unchanged for non-positive n.
Integer multichoose(const Integer& n, long k);

/// base^exp for integer exp; negative exp requires base != 0.
Rational pow(const Rational& base, long exp);

}  // namespace hcf
