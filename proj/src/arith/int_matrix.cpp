#include "qheis/arith/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qheis {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix: ragged initializer");
        }
        for (long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1;
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& v : out.data_) {
        v = -v;
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    }
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && (*this)(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) {
        return 1;
    }
    IntMatrix a = *this;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(swap_row, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt value = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = value;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

struct Reducer {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) {
            return;
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::swap(a(i, c), a(j, c));
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
            std::swap(u(i, c), u(j, c));
        }
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) {
            return;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            std::swap(a(r, i), a(r, j));
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
            std::swap(v(r, i), v(r, j));
        }
    }

    // row_target += factor * row_source
    void add_row(std::size_t target, std::size_t source, const BigInt& factor) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(target, c) += factor * a(source, c);
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
            u(target, c) += factor * u(source, c);
        }
    }

    void add_col(std::size_t target, std::size_t source, const BigInt& factor) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
            a(r, target) += factor * a(r, source);
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
            v(r, target) += factor * v(r, source);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(i, c) = -a(i, c);
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
            u(i, c) = -u(i, c);
        }
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    auto& a = red.a;
    const std::size_t rank_bound = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < rank_bound; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block becomes the pivot
            std::size_t pr = t, pc = t;
            bool found = false;
            for (std::size_t r = t; r < a.rows(); ++r) {
                for (std::size_t c = t; c < a.cols(); ++c) {
                    if (a(r, c) != 0 && (!found || abs(a(r, c)) < abs(a(pr, pc)))) {
                        pr = r;
                        pc = c;
                        found = true;
                    }
                }
            }
            if (!found) {
                break;
            }
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                if (a(r, t) != 0) {
                    BigInt q;
                    mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
                    red.add_row(r, t, -q);
                    clean = clean && a(r, t) == 0;
                }
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                if (a(t, c) != 0) {
                    BigInt q;
                    mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
                    red.add_col(c, t, -q);
                    clean = clean && a(t, c) == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t r = t + 1; r < a.rows() && divides; ++r) {
                for (std::size_t c = t + 1; c < a.cols(); ++c) {
                    if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
                        red.add_row(t, r, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (a(t, t) < 0) {
            red.negate_row(t);
        }
    }

    SmithForm out;
    out.invariant_factors.reserve(rank_bound);
    for (std::size_t t = 0; t < rank_bound; ++t) {
        out.invariant_factors.push_back(a(t, t));
    }
    out.left = std::move(red.u);
    out.diagonal = std::move(red.a);
    out.right = std::move(red.v);
    return out;
}

} // namespace qheis
