#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcf/exact.hpp"

namespace hcf {

/// Finite continued fraction digit list [c1, ..., cn]. The first digit
/// may be any integer (it is floor(x)); every later digit is >= 1.
/// Canonical form additionally has cn >= 2 whenever n >= 2, which makes
/// the representation of each rational unique.
class CFExpansion {
public:
    explicit CFExpansion(std::vector<Integer> digits);

    const std::vector<Integer>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }
    bool is_canonical() const { return digits_.size() == 1 || digits_.back() >= 2; }

    std::string to_string() const;  // "[c1,c2,...]"

    friend bool operator==(const CFExpansion& a, const CFExpansion& b) = default;

private:
    std::vector<Integer> digits_;
};

/// Folds a trailing 1 into the previous digit: [.., c, 1] -> [.., c+1].
CFExpansion canonicalize(const CFExpansion& cf);

/// Canonical expansion of a rational by the floor-then-reciprocal
/// recursion; satisfies evaluate(expand(x)) == x.
CFExpansion expand(const Rational& x);

/// Exact value c1 + 1/(c2 + 1/(... + 1/cn)). Input need not be
/// canonical; a zero tail under a reciprocal is reported as an error
/// (unreachable for digit lists satisfying the type invariants).
Rational evaluate(const CFExpansion& cf);

/// Independent cursor over the digits of a real input. Finite streams
/// end (next() returns nullopt); the rest never do.
class DigitStream {
public:
    std::optional<Integer> next();

private:
    friend class RealInput;

    struct Finite {
        std::shared_ptr<const std::vector<Integer>> digits;
        std::size_t pos = 0;
    };
    struct Periodic {
        std::shared_ptr<const std::vector<Integer>> preperiod;
        std::shared_ptr<const std::vector<Integer>> period;
        std::size_t pos = 0;
    };
    struct GoldenRatio {};  // 1, 1, 1, ...
    struct EulerNumber {    // 2, 1, 2, 1, 1, 4, 1, 1, 6, ...
        std::size_t pos = 0;
    };
    struct SquareRoot {  // classical surd recurrence for sqrt(n)
        Integer n;
        Integer root;  // floor(sqrt(n))
        Integer p = 0;
        Integer q = 1;
    };
    using State = std::variant<Finite, Periodic, GoldenRatio, EulerNumber, SquareRoot>;

    explicit DigitStream(State s) : state_(std::move(s)) {}
    State state_;
};

/// A real number given by its continued fraction digits: a finite list
/// (rational), an eventually periodic list (quadratic irrational), or a
/// named digit generator. Immutable; stream() hands out independent
/// cursors.
class RealInput {
public:
    static RealInput finite(CFExpansion cf);
    static RealInput eventually_periodic(std::vector<Integer> preperiod,
                                         std::vector<Integer> period);
    static RealInput golden_ratio();
    static RealInput euler_number();
    static RealInput square_root(const Integer& d);  // d >= 2, not a perfect square

    /// Grammar: "p/q" | integer | decimal | "[c1,c2,...]" |
    /// "[c1,...;(p1,...,pk)]" | "phi" | "sqrt:D" | "e".
    /// Rational literals are expanded to their canonical finite CF.
    static RealInput parse(std::string_view text);

    bool is_irrational() const { return !std::holds_alternative<FiniteKind>(kind_); }

    /// The digit list when the input is finite; error otherwise.
    const CFExpansion& finite_expansion() const;

    DigitStream stream() const;
    std::string to_string() const;

private:
    struct FiniteKind { std::shared_ptr<const CFExpansion> cf; };
    struct PeriodicKind {
        std::shared_ptr<const std::vector<Integer>> preperiod;
        std::shared_ptr<const std::vector<Integer>> period;
    };
    struct PhiKind {};
    struct EulerKind {};
    struct SqrtKind { Integer d; Integer root; };
    using Kind = std::variant<FiniteKind, PeriodicKind, PhiKind, EulerKind, SqrtKind>;

    explicit RealInput(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

struct ConvergentPair {
    std::size_t index;  // 1-based prefix length
    Rational value;
};

/// Exact values of the first `count` digit prefixes. Finite inputs with
/// fewer digits are reported as an error naming the available length.
std::vector<ConvergentPair> convergents(const RealInput& x, std::size_t count);

}  // namespace hcf
