#include "hcf/exact.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace hcf {

namespace {

std::string trimmed(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

}  // namespace

Integer parse_integer(std::string_view text) {
    const std::string s = trimmed(text);
    static const std::regex form(R"(^[+-]?[0-9]+$)");
    if (!std::regex_match(s, form))
        throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
    return Integer(s);
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s = trimmed(text);
    static const std::regex fraction(R"(^([+-]?[0-9]+)\s*/\s*([+-]?[0-9]+)$)");
    static const std::regex decimal(R"(^([+-]?)([0-9]+)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, fraction))
        return Rational(Integer(m[1].str()), Integer(m[2].str()));
    if (std::regex_match(s, m, decimal)) {
        const std::string frac = m[3].matched ? m[3].str() : "";
        Integer num(m[2].str() + frac);
        if (m[1].str() == "-") num = -num;
        Integer den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational value(num, den);
        if (m[4].matched) {
            const long ex = std::stol(m[4].str());
            Integer p10 = 1;
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(ex < 0 ? -ex : ex));
            value = ex < 0 ? value / Rational(p10) : value * Rational(p10);
        }
        return value;
    }
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(inv));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) == 0; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string Rational::to_fraction_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal_string(int precision) const {
    if (precision < 0) throw std::invalid_argument("negative decimal precision");
    Integer num = numerator();
    const Integer den = denominator();
    const bool negative = num < 0;
    if (negative) num = -num;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    // round(num*scale/den), ties away from zero
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), Integer(2 * num * scale + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    std::string digits = scaled.get_str();
    if (digits.size() <= static_cast<size_t>(precision))
        digits.insert(0, static_cast<size_t>(precision) + 1 - digits.size(), '0');
    std::string out;
    if (negative && scaled != 0) out += '-';
    if (precision == 0) {
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - precision);
        out += '.';
        out += digits.substr(digits.size() - precision);
    }
    return out;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer result = 1;
    for (long idx = 0; idx < k; ++idx) {
        result *= n - idx;
        // result is binomial(n, idx+1) * (idx+1)! / (idx+1)! step by step;
        // each division is exact because result holds C(n, idx) * (n - idx).
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(idx + 1));
    }
    return result;
}

Integer multichoose(const Integer& n, long k) { return binomial(n + k - 1, k); }

Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    const bool invert = exp < 0;
    if (invert && base.is_zero()) throw std::domain_error("zero to a negative power");
    const unsigned long e = static_cast<unsigned long>(invert ? -exp : exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    Rational out(num, den);
    return invert ? out.reciprocal() : out;
}

}  // namespace hcf
