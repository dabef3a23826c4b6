#include "hcf/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hcf {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const Integer& aik = at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                const Integer& bkj = other.at(k, j);
                if (sgn(bkj) == 0) continue;
                mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::pow(const Integer& exp) const {
    if (exp < 0) throw std::invalid_argument("negative matrix exponent");
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    const size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return result;
    for (size_t bit = 0; bit < bits; ++bit) {
        if (mpz_tstbit(exp.get_mpz_t(), bit)) result = result * base;
        if (bit + 1 < bits) base = base * base;
    }
    return result;
}

Integer IntMatrix::determinant() const {
    if (n_ == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n_ && sgn(m.at(pivot, k)) == 0) ++pivot;
            if (pivot == n_) return 0;
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                Integer t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(t);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n_ - 1, n_ - 1);
    return sign < 0 ? Integer(-det) : det;
}

std::string IntMatrix::to_aligned_string() const {
    std::vector<std::string> text(n_ * n_);
    std::vector<std::size_t> width(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            text[i * n_ + j] = at(i, j).get_str();
            width[j] = std::max(width[j], text[i * n_ + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const std::string& cell = text[i * n_ + j];
            if (j) out << ' ';
            out << std::string(width[j] - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hcf
