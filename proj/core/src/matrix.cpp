// Copyright 2026 The cvlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvlc/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "cvlc/errors.hpp"

namespace cvlc {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>> &rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("row " + std::to_string(r) + " has wrong length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<Rational> RatMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

bool RatMatrix::is_zero() const {
    for (const auto &x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RatMatrix RatMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) {
        throw DimensionMismatch("block out of range");
    }
    RatMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            b(i, j) = (*this)(row0 + i, col0 + j);
        }
    }
    return b;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational &aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational &bkj = b(k, j);
                if (!bkj.is_zero()) {
                    out(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

RatMatrix operator+(const RatMatrix &a, const RatMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("matrix sum shape mismatch");
    }
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

RatMatrix operator-(const RatMatrix &a, const RatMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("matrix difference shape mismatch");
    }
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

std::string RatMatrix::to_string() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const RatMatrix &m) {
    out << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? "," : "") << m(i, j);
        }
        out << ']';
    }
    return out << ']';
}

std::vector<std::size_t> rref_in_place(RatMatrix &m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t j = col; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(lead_row, j));
            }
        }
        if (!m(lead_row, col).is_one()) {
            Rational scale = Rational(1) / m(lead_row, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(lead_row, j).is_zero()) {
                    m(lead_row, j) *= scale;
                }
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) {
                continue;
            }
            Rational factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(lead_row, j).is_zero()) {
                    m(r, j) -= factor * m(lead_row, j);
                }
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

RrefResult rref(const RatMatrix &m) {
    RrefResult result{m, {}};
    result.pivots = rref_in_place(result.matrix);
    return result;
}

std::size_t rank(const RatMatrix &m) {
    RatMatrix copy = m;
    return rref_in_place(copy).size();
}

RatMatrix inverse(const RatMatrix &m) {
    if (!m.is_square()) {
        throw DimensionMismatch("inverse of non-square matrix");
    }
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw SingularMatrix("matrix is singular");
    }
    return aug.block(0, n, n, n);
}

Rational determinant(const RatMatrix &m) {
    if (!m.is_square()) {
        throw DimensionMismatch("determinant of non-square matrix");
    }
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
            }
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) {
                continue;
            }
            Rational factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
            }
        }
    }
    return det;
}

RatMatrix rowspace_basis(const RatMatrix &m) {
    RatMatrix reduced = m;
    auto pivots = rref_in_place(reduced);
    return reduced.block(0, 0, pivots.size(), reduced.cols());
}

bool rowspace_equal(const RatMatrix &a, const RatMatrix &b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("rowspace_equal: column counts differ (" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.cols()) + ")");
    }
    return rowspace_basis(a) == rowspace_basis(b);
}

std::optional<std::vector<Rational>> express_in_rows(const RatMatrix &basis, std::span<const Rational> target) {
    if (target.size() != basis.cols()) {
        throw DimensionMismatch("express_in_rows: target length mismatch");
    }
    // Solve basis^T * c = target through rref of [basis^T | target].
    const std::size_t k = basis.rows();
    const std::size_t m = basis.cols();
    RatMatrix aug(m, k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            aug(i, j) = basis(j, i);
        }
        aug(i, k) = target[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == k) {
        return std::nullopt;
    }
    if (pivots.size() != k) {
        throw SingularMatrix("express_in_rows: basis rows are dependent");
    }
    std::vector<Rational> coeffs(k);
    for (std::size_t i = 0; i < k; ++i) {
        coeffs[pivots[i]] = aug(i, k);
    }
    return coeffs;
}

}  // namespace cvlc
