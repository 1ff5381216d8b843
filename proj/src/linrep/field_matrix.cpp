#include "qheis/linrep/field_matrix.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace qheis {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycNumber(conductor)) {}

FieldMatrix FieldMatrix::identity(std::size_t n, unsigned conductor) {
    return scalar(n, CycNumber(conductor, 1L));
}

FieldMatrix FieldMatrix::scalar(std::size_t n, const CycNumber& value) {
    FieldMatrix out(n, n, value.conductor());
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = value;
    }
    return out;
}

FieldMatrix FieldMatrix::diagonal(const std::vector<CycNumber>& entries) {
    if (entries.empty()) {
        throw std::invalid_argument("FieldMatrix::diagonal: no entries");
    }
    FieldMatrix out(entries.size(), entries.size(), entries.front().conductor());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out(i, i) = entries[i];
    }
    return out;
}

void FieldMatrix::require_shape(const FieldMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("FieldMatrix: shape mismatch");
    }
    if (conductor_ != other.conductor_) {
        throw std::invalid_argument("FieldMatrix: conductor mismatch");
    }
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(cols_, rows_, conductor_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

FieldMatrix FieldMatrix::pow(unsigned exponent) const {
    if (!is_square()) {
        throw std::invalid_argument("FieldMatrix::pow: not square");
    }
    FieldMatrix result = identity(rows_, conductor_);
    FieldMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

bool FieldMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<CycNumber> FieldMatrix::as_scalar() const {
    if (!is_square() || rows_ == 0) {
        return std::nullopt;
    }
    const CycNumber& c = (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t col = 0; col < cols_; ++col) {
            const CycNumber& v = (*this)(r, col);
            if (r == col ? !(v == c) : !v.is_zero()) {
                return std::nullopt;
            }
        }
    }
    return c;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& other) {
    require_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].is_zero()) {
            data_[i] += other.data_[i];
        }
    }
    return *this;
}

FieldMatrix& FieldMatrix::operator-=(const FieldMatrix& other) {
    require_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].is_zero()) {
            data_[i] -= other.data_[i];
        }
    }
    return *this;
}

FieldMatrix& FieldMatrix::operator*=(const CycNumber& factor) {
    for (auto& v : data_) {
        if (!v.is_zero()) {
            v *= factor;
        }
    }
    return *this;
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix out = *this;
    for (auto& v : out.data_) {
        v = -v;
    }
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("FieldMatrix: dimension mismatch in product");
    }
    if (a.conductor_ != b.conductor_) {
        throw std::invalid_argument("FieldMatrix: conductor mismatch");
    }
    FieldMatrix out(a.rows_, b.cols_, a.conductor_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNumber& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycNumber& bkj = b(k, j);
                if (!bkj.is_zero()) {
                    out(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ && a.data_ == b.data_;
}

FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.conductor() != b.conductor()) {
        throw std::invalid_argument("direct_sum: conductor mismatch");
    }
    FieldMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.conductor());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c);
        }
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(a.rows() + r, a.cols() + c) = b(r, c);
        }
    }
    return out;
}

RowReduction row_reduce(const FieldMatrix& m) {
    RowReduction out;
    FieldMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(a(pivot, c), a(row, c));
            }
        }
        const CycNumber inv = a(row, col).inverse();
        for (std::size_t c = col; c < cols; ++c) {
            if (!a(row, c).is_zero()) {
                a(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) {
                continue;
            }
            const CycNumber factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) {
                if (!a(row, c).is_zero()) {
                    a(r, c) -= factor * a(row, c);
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : out.pivots) {
        is_pivot[p] = true;
    }
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<CycNumber> v(cols, CycNumber(m.conductor()));
        v[free] = CycNumber(m.conductor(), 1L);
        for (std::size_t r = 0; r < out.rank; ++r) {
            v[out.pivots[r]] = -a(r, free);
        }
        out.kernel.push_back(std::move(v));
    }
    out.reduced = std::move(a);
    return out;
}

std::vector<std::vector<CycNumber>> joint_left_kernel(const std::vector<FieldMatrix>& mats) {
    if (mats.empty()) {
        throw std::invalid_argument("joint_left_kernel: no matrices");
    }
    // w M_i = 0 for all i  <=>  M_i^T w^T = 0, stacked vertically.
    const std::size_t n = mats.front().rows();
    std::size_t total = 0;
    for (const auto& m : mats) {
        if (m.rows() != n) {
            throw std::invalid_argument("joint_left_kernel: row counts differ");
        }
        total += m.cols();
    }
    FieldMatrix stacked(total, n, mats.front().conductor());
    std::size_t offset = 0;
    for (const auto& m : mats) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (std::size_t r = 0; r < n; ++r) {
                stacked(offset + c, r) = m(r, c);
            }
        }
        offset += m.cols();
    }
    return row_reduce(stacked).kernel;
}

namespace {

// Echelon basis kept in insertion order; vector b_j vanishes on the pivots of
// every earlier b_i, so one forward sweep fully reduces a candidate.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    std::size_t size() const noexcept { return rows_.size(); }

    bool insert(std::vector<CycNumber> v) {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const CycNumber& lead = v[pivots_[b]];
            if (lead.is_zero()) {
                continue;
            }
            const CycNumber factor = lead;
            const auto& row = rows_[b];
            for (std::size_t c = 0; c < width_; ++c) {
                if (!row[c].is_zero()) {
                    v[c] -= factor * row[c];
                }
            }
        }
        std::size_t pivot = 0;
        while (pivot < width_ && v[pivot].is_zero()) {
            ++pivot;
        }
        if (pivot == width_) {
            return false;
        }
        const CycNumber inv = v[pivot].inverse();
        for (auto& e : v) {
            if (!e.is_zero()) {
                e *= inv;
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::size_t width_;
    std::vector<std::vector<CycNumber>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<CycNumber> flatten(const FieldMatrix& m) {
    std::vector<CycNumber> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.push_back(m(r, c));
        }
    }
    return out;
}

} // namespace

std::size_t algebra_span_dim(const std::vector<FieldMatrix>& generators) {
    if (generators.empty()) {
        throw std::invalid_argument("algebra_span_dim: no generators");
    }
    const std::size_t d = generators.front().rows();
    for (const auto& g : generators) {
        if (g.rows() != d || g.cols() != d) {
            throw std::invalid_argument("algebra_span_dim: generators must be square of equal size");
        }
        if (g.conductor() != generators.front().conductor()) {
            throw std::invalid_argument("algebra_span_dim: conductor mismatch");
        }
    }
    const std::size_t full = d * d;
    EchelonBasis basis(full);
    std::deque<FieldMatrix> frontier;
    const FieldMatrix one = FieldMatrix::identity(d, generators.front().conductor());
    basis.insert(flatten(one));
    frontier.push_back(one);
    while (!frontier.empty() && basis.size() < full) {
        const FieldMatrix word = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            FieldMatrix next = word * g;
            if (basis.insert(flatten(next))) {
                frontier.push_back(std::move(next));
                if (basis.size() == full) {
                    break;
                }
            }
        }
    }
    return basis.size();
}

} // namespace qheis
