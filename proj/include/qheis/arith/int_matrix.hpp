#pragma once

#include "qheis/exactnum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qheis {

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    bool is_diagonal() const;
    /// Fraction-free (Bareiss) determinant; square matrices only.
    BigInt determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithForm {
    /// Diagonal of D: d_1 | d_2 | ... , min(rows, cols) entries, all >= 0.
    std::vector<BigInt> invariant_factors;
    IntMatrix left;     // U, unimodular rows x rows
    IntMatrix diagonal; // D = U * M * V
    IntMatrix right;    // V, unimodular cols x cols
};

/// Smith normal form by gcd-driven row/column elimination with the unimodular
/// transforms accumulated alongside.
SmithForm smith_normal_form(const IntMatrix& m);

} // namespace qheis
