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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvlc/rational.hpp"

namespace cvlc {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
   public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Rational> row_vector(std::size_t r) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_symmetric() const;

    RatMatrix transpose() const;
    RatMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

    friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
    friend RatMatrix operator+(const RatMatrix &a, const RatMatrix &b);
    friend RatMatrix operator-(const RatMatrix &a, const RatMatrix &b);
    friend bool operator==(const RatMatrix &a, const RatMatrix &b) = default;

    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream &operator<<(std::ostream &out, const RatMatrix &m);

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows end up at the bottom; pivot columns ascend.
RrefResult rref(const RatMatrix &m);

/// In-place variant used on hot paths; returns the pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix &m);

std::size_t rank(const RatMatrix &m);

/// Throws SingularMatrix for singular input and DimensionMismatch for non-square input.
RatMatrix inverse(const RatMatrix &m);

Rational determinant(const RatMatrix &m);

/// True iff both matrices span the same row space. Throws DimensionMismatch when column counts differ.
bool rowspace_equal(const RatMatrix &a, const RatMatrix &b);

/// Nonzero rows of rref(m): a canonical basis of the row space.
RatMatrix rowspace_basis(const RatMatrix &m);

/// Coefficients c with sum_i c_i * basis.row(i) == target, or nullopt if target is outside the row space.
/// Requires the rows of `basis` to be linearly independent.
std::optional<std::vector<Rational>> express_in_rows(const RatMatrix &basis, std::span<const Rational> target);

}  // namespace cvlc
