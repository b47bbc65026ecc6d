#pragma once

#include <stdexcept>
#include <vector>

#include "alpert/rational.hpp"

namespace alpert {

// Dense rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination; pivots are exact zero tests.
inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    Rational prev_pivot(1);
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational pivot = m.at(r, col);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, col) * m.at(r, j)) / prev_pivot;
            m.at(i, col) = 0;
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

namespace detail {

// Reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace detail

// Basis of the right null space {x : M x = 0}, one vector per free column in
// ascending column order, with a 1 in the free coordinate.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve M x = b exactly; returns false when inconsistent. Underdetermined
// systems get the solution with zeros in all free coordinates.
inline bool solve(RationalMatrix m, std::vector<Rational> b, std::vector<Rational>& x) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, m.cols());
    return true;
}

} // namespace alpert
