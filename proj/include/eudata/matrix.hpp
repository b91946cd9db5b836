#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eudata/errors.hpp"
#include "eudata/polynomial.hpp"

namespace eudata {

// Dense grid of polynomials, row major. Only used for Jacobians and their
// minors, so it stays deliberately small.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const std::vector<std::string>& vars)
        : rows_(rows), cols_(cols), data_(rows * cols, Polynomial(vars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Polynomial& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> data_;
};

namespace detail {

// Cofactor expansion along the first remaining row.
inline Polynomial submatrix_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    const std::vector<std::string>& vars = m.at(0, 0).vars();
    Polynomial det(vars);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Polynomial& pivot = m.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial cofactor = pivot * submatrix_det(m, sub_rows, sub_cols);
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

// Enumerate k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        bool advanced = false;
        for (std::size_t i = k; i-- > 0;) {
            if (cur[i] < n - k + i) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return out;
    }
}

}  // namespace detail

// Full determinant of a square matrix by cofactor expansion.
inline Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw SizeError("determinant needs a nonempty square matrix");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::submatrix_det(m, idx, idx);
}

// All size x size minor determinants, row subsets outer, column subsets
// inner, both lexicographic.
inline std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size) {
    if (size == 0 || size > m.rows() || size > m.cols())
        throw SizeError("minor size " + std::to_string(size) + " exceeds matrix dimensions " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    std::vector<Polynomial> out;
    for (const auto& rows : detail::subsets(m.rows(), size))
        for (const auto& cols : detail::subsets(m.cols(), size))
            out.push_back(detail::submatrix_det(m, rows, cols));
    return out;
}

}  // namespace eudata
