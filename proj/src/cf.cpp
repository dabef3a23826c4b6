#include "hcf/cf.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hcf {

namespace {

void require_tail_digits(const std::vector<Integer>& digits, size_t from,
                         const char* what) {
    for (size_t i = from; i < digits.size(); ++i)
        if (digits[i] < 1)
            throw std::invalid_argument(std::string(what) + ": digit " +
                                        std::to_string(i + 1) + " is " +
                                        digits[i].get_str() + ", must be >= 1");
}

std::vector<Integer> parse_digit_list(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty digit list");
    std::vector<Integer> digits;
    size_t start = 0;
    for (;;) {
        const size_t comma = text.find(',', start);
        digits.push_back(parse_integer(
            text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return digits;
}

}  // namespace

CFExpansion::CFExpansion(std::vector<Integer> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("continued fraction needs at least one digit");
    require_tail_digits(digits_, 1, "continued fraction");
}

std::string CFExpansion::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) out << ',';
        out << digits_[i].get_str();
    }
    out << ']';
    return out.str();
}

CFExpansion canonicalize(const CFExpansion& cf) {
    if (cf.is_canonical()) return cf;
    std::vector<Integer> digits = cf.digits();
    digits.pop_back();
    digits.back() += 1;
    return CFExpansion(std::move(digits));
}

CFExpansion expand(const Rational& x) {
    std::vector<Integer> digits;
    Rational cur = x;
    for (;;) {
        Integer a = cur.floor();
        Rational frac = cur - Rational(a);
        digits.push_back(std::move(a));
        if (frac.is_zero()) break;
        cur = frac.reciprocal();
    }
    return CFExpansion(std::move(digits));
}

Rational evaluate(const CFExpansion& cf) {
    const auto& d = cf.digits();
    Rational acc(d.back());
    for (size_t i = d.size() - 1; i-- > 0;) {
        if (acc.is_zero())
            throw std::domain_error("continued fraction tail evaluates to zero at digit " +
                                    std::to_string(i + 2));
        acc = Rational(d[i]) + acc.reciprocal();
    }
    return acc;
}

std::optional<Integer> DigitStream::next() {
    if (auto* f = std::get_if<Finite>(&state_)) {
        if (f->pos >= f->digits->size()) return std::nullopt;
        return (*f->digits)[f->pos++];
    }
    if (auto* p = std::get_if<Periodic>(&state_)) {
        const size_t npre = p->preperiod->size();
        if (p->pos < npre) return (*p->preperiod)[p->pos++];
        const Integer& d = (*p->period)[(p->pos - npre) % p->period->size()];
        ++p->pos;
        return d;
    }
    if (std::holds_alternative<GoldenRatio>(state_)) return Integer(1);
    if (auto* e = std::get_if<EulerNumber>(&state_)) {
        const size_t pos = e->pos++;
        if (pos == 0) return Integer(2);
        // after the leading 2: blocks (1, 2k, 1) for k = 1, 2, ...
        const size_t k = pos - 1;
        if (k % 3 == 1) return Integer(2 * (k / 3 + 1));
        return Integer(1);
    }
    auto& s = std::get<SquareRoot>(state_);
    Integer a = (s.root + s.p) / s.q;  // floor; all quantities nonnegative
    s.p = a * s.q - s.p;
    Integer q_next = s.n - s.p * s.p;
    mpz_divexact(q_next.get_mpz_t(), q_next.get_mpz_t(), s.q.get_mpz_t());
    s.q = std::move(q_next);
    return a;
}

RealInput RealInput::finite(CFExpansion cf) {
    return RealInput(FiniteKind{std::make_shared<const CFExpansion>(std::move(cf))});
}

RealInput RealInput::eventually_periodic(std::vector<Integer> preperiod,
                                         std::vector<Integer> period) {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    for (const Integer& d : period)
        if (d < 1) throw std::invalid_argument("period digits must be >= 1");
    require_tail_digits(preperiod, preperiod.empty() ? 0 : 1, "preperiod");
    return RealInput(PeriodicKind{
        std::make_shared<const std::vector<Integer>>(std::move(preperiod)),
        std::make_shared<const std::vector<Integer>>(std::move(period))});
}

RealInput RealInput::golden_ratio() { return RealInput(PhiKind{}); }
RealInput RealInput::euler_number() { return RealInput(EulerKind{}); }

RealInput RealInput::square_root(const Integer& d) {
    if (d < 2) throw std::invalid_argument("sqrt:D requires D >= 2");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    if (root * root == d)
        throw std::invalid_argument("sqrt:" + d.get_str() +
                                    " is the integer " + root.get_str() +
                                    "; use a rational input instead");
    return RealInput(SqrtKind{d, root});
}

RealInput RealInput::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "phi") return golden_ratio();
    if (s == "e") return euler_number();
    if (s.starts_with("sqrt:")) return square_root(parse_integer(s.substr(5)));
    if (s.starts_with("[")) {
        if (!s.ends_with("]")) throw std::invalid_argument("unterminated digit list: '" + s + "'");
        const std::string body = s.substr(1, s.size() - 2);
        const size_t semi = body.find(';');
        if (semi == std::string::npos)
            return finite(CFExpansion(parse_digit_list(body)));
        std::string pre = body.substr(0, semi);
        std::string per = body.substr(semi + 1);
        if (!per.starts_with("(") || !per.ends_with(")"))
            throw std::invalid_argument("period must be parenthesized: '" + s + "'");
        per = per.substr(1, per.size() - 2);
        std::vector<Integer> preperiod;
        if (!pre.empty()) preperiod = parse_digit_list(pre);
        return eventually_periodic(std::move(preperiod), parse_digit_list(per));
    }
    return finite(expand(Rational::parse(s)));
}

const CFExpansion& RealInput::finite_expansion() const {
    if (auto* f = std::get_if<FiniteKind>(&kind_)) return *f->cf;
    throw std::domain_error("input is irrational; it has no finite expansion");
}

DigitStream RealInput::stream() const {
    if (auto* f = std::get_if<FiniteKind>(&kind_))
        return DigitStream(DigitStream::Finite{
            std::shared_ptr<const std::vector<Integer>>(f->cf, &f->cf->digits())});
    if (auto* p = std::get_if<PeriodicKind>(&kind_))
        return DigitStream(DigitStream::Periodic{p->preperiod, p->period});
    if (std::holds_alternative<PhiKind>(kind_))
        return DigitStream(DigitStream::GoldenRatio{});
    if (std::holds_alternative<EulerKind>(kind_))
        return DigitStream(DigitStream::EulerNumber{});
    const auto& s = std::get<SqrtKind>(kind_);
    return DigitStream(DigitStream::SquareRoot{s.d, s.root});
}

std::string RealInput::to_string() const {
    if (auto* f = std::get_if<FiniteKind>(&kind_)) return f->cf->to_string();
    if (auto* p = std::get_if<PeriodicKind>(&kind_)) {
        std::ostringstream out;
        out << '[';
        for (size_t i = 0; i < p->preperiod->size(); ++i) {
            if (i) out << ',';
            out << (*p->preperiod)[i].get_str();
        }
        out << ";(";
        for (size_t i = 0; i < p->period->size(); ++i) {
            if (i) out << ',';
            out << (*p->period)[i].get_str();
        }
        out << ")]";
        return out.str();
    }
    if (std::holds_alternative<PhiKind>(kind_)) return "phi";
    if (std::holds_alternative<EulerKind>(kind_)) return "e";
    return "sqrt:" + std::get<SqrtKind>(kind_).d.get_str();
}

std::vector<ConvergentPair> convergents(const RealInput& x, std::size_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    DigitStream digits = x.stream();
    std::vector<ConvergentPair> out;
    out.reserve(count);
    // numerator/denominator recurrence: h_k = c_k h_{k-1} + h_{k-2}
    Integer h_prev = 1, h_prev2 = 0;  // h_0, h_{-1}
    Integer k_prev = 0, k_prev2 = 1;
    for (size_t idx = 1; idx <= count; ++idx) {
        std::optional<Integer> c = digits.next();
        if (!c)
            throw std::domain_error("requested " + std::to_string(count) +
                                    " convergents but only " + std::to_string(idx - 1) +
                                    " digits are available");
        Integer h = *c * h_prev + h_prev2;
        Integer k = *c * k_prev + k_prev2;
        out.push_back({idx, Rational(h, k)});
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
    }
    return out;
}

}  // namespace hcf
