#pragma once

#include "qheis/exactnum/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qheis {

/// Dense matrix over Q(zeta_N). Every entry carries the same conductor.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, unsigned conductor);

    static FieldMatrix identity(std::size_t n, unsigned conductor);
    static FieldMatrix scalar(std::size_t n, const CycNumber& value);
    static FieldMatrix diagonal(const std::vector<CycNumber>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    unsigned conductor() const noexcept { return conductor_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    CycNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FieldMatrix transpose() const;
    FieldMatrix pow(unsigned exponent) const;

    bool is_zero() const;
    /// c when the matrix equals c * I.
    std::optional<CycNumber> as_scalar() const;

    FieldMatrix& operator+=(const FieldMatrix& other);
    FieldMatrix& operator-=(const FieldMatrix& other);
    FieldMatrix& operator*=(const CycNumber& factor);
    FieldMatrix operator-() const;

    friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
    friend FieldMatrix operator-(FieldMatrix a, const FieldMatrix& b) { return a -= b; }
    friend FieldMatrix operator*(FieldMatrix a, const CycNumber& c) { return a *= c; }
    friend FieldMatrix operator*(const CycNumber& c, FieldMatrix a) { return a *= c; }
    /// Skips zero entries of the left factor; most matrices here are shifts or
    /// diagonals.
    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

private:
    void require_shape(const FieldMatrix& other) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned conductor_ = 1;
    std::vector<CycNumber> data_;
};

/// Block diagonal diag(a, b).
FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b);

struct RowReduction {
    FieldMatrix reduced;               // reduced row echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::vector<std::vector<CycNumber>> kernel; // basis of {v : M v = 0}
};

/// Exact Gauss-Jordan elimination.
RowReduction row_reduce(const FieldMatrix& m);

/// Basis of the row vectors w with w * M_i = 0 for every i.
std::vector<std::vector<CycNumber>> joint_left_kernel(const std::vector<FieldMatrix>& mats);

/// Dimension of the unital algebra generated by the given square matrices.
/// Throws std::invalid_argument on an empty list or mismatched sizes.
std::size_t algebra_span_dim(const std::vector<FieldMatrix>& generators);

} // namespace qheis
