/*
 * Copyright 2026 The troplin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file matvec.hpp
 *
 * Dense matrices and vectors over one semifield flavor, their products, and
 * the zero-entry preprocessing of one-sided systems AX = b.
 */

#ifndef TROPLIN_MATVEC_HPP
#define TROPLIN_MATVEC_HPP

#include "troplin/semifield.hpp"

#include <cstddef>
#include <vector>

namespace troplin {

/// Incompatible shapes or flavors.
struct DimensionError : Error {
    using Error::Error;
};

/// Dense rectangular matrix of carrier scalars (Top is rejected).
class Matrix {
public:
    Matrix(Flavor f, std::size_t rows, std::size_t cols);
    Matrix(Flavor f, std::vector<std::vector<Scalar>> rows);

    static Matrix identity(Flavor f, std::size_t n);

    Flavor flavor() const { return flavor_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, const Scalar& v);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    Flavor flavor_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Column vector of carrier scalars.
class Vector {
public:
    Vector(Flavor f, std::size_t size);
    Vector(Flavor f, std::vector<Scalar> entries);

    Flavor flavor() const { return flavor_; }
    std::size_t size() const { return entries_.size(); }

    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, const Scalar& v);

    friend bool operator==(const Vector& a, const Vector& b) = default;

private:
    Flavor flavor_;
    std::vector<Scalar> entries_;
};

/// Result of removing zero-b rows and their forced columns from AX = b.
struct ReducedSystem {
    enum class Verdict { Reduced, TriviallyUnsolvable };

    std::vector<std::size_t> kept_rows;
    std::vector<std::size_t> kept_cols;
    std::vector<std::size_t> forced_zero_vars;
    Matrix a;
    Vector b;
    Verdict verdict = Verdict::Reduced;

    bool identity_reduction(std::size_t m, std::size_t n) const {
        return kept_rows.size() == m && kept_cols.size() == n;
    }
};

/// (A (x) B)_ij = (+)_k a_ik (x) b_kj.
Matrix mat_mul(const Matrix& a, const Matrix& b);

Vector mat_vec_mul(const Matrix& a, const Vector& x);

/// Scales column j of A by alphas[j]; the result stays in A's equivalence
/// class. Zero scale factors are rejected.
Matrix scalar_col_scale(const Matrix& a, const Vector& alphas);

/// True iff the vector has no zero entry.
bool is_regular(const Vector& v);

/// For every row i with b_i = zero: the row is removed, every column j with
/// a_ij != zero is removed, and x_j is forced to zero. The verdict is
/// TriviallyUnsolvable when a kept row (b_i != zero) is left with no nonzero
/// entry. When the verdict is Reduced, the reduced b is regular.
ReducedSystem preprocess_system(const Matrix& a, const Vector& b);

}  // namespace troplin

#endif  // TROPLIN_MATVEC_HPP
