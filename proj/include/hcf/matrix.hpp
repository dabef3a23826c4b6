#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcf/exact.hpp"

namespace hcf {

/// Dense square matrix of exact integers. Row-major, 0-based accessors.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), cells_(n * n) {}
    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    Integer& at(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
    const Integer& at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

    IntMatrix operator*(const IntMatrix& other) const;

    /// Exponentiation by squaring; exp must be >= 0.
    IntMatrix pow(const Integer& exp) const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Integer determinant() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Rows of right-aligned entries, for plain CLI output.
    std::string to_aligned_string() const;

private:
    std::size_t n_ = 0;
    std::vector<Integer> cells_;
};

}  // namespace hcf
