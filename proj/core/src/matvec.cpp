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

#include "troplin/matvec.hpp"

#include <algorithm>

namespace troplin {

namespace {

void reject_top(const Scalar& v) {
    if (v.is_top()) throw DomainError("Top cannot appear in matrix or vector data");
}

}  // namespace

Matrix::Matrix(Flavor f, std::size_t rows, std::size_t cols)
    : flavor_(f), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Flavor f, std::vector<std::vector<Scalar>> rows)
    : flavor_(f), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("matrix rows have unequal lengths");
        for (const auto& v : row) {
            reject_top(v);
            entries_.push_back(v);
        }
    }
}

Matrix Matrix::identity(Flavor f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one(f));
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    reject_top(v);
    entries_[i * cols_ + j] = v;
}

Vector::Vector(Flavor f, std::size_t size) : flavor_(f), entries_(size) {}

Vector::Vector(Flavor f, std::vector<Scalar> entries)
    : flavor_(f), entries_(std::move(entries)) {
    for (const auto& v : entries_) reject_top(v);
}

void Vector::set(std::size_t i, const Scalar& v) {
    reject_top(v);
    entries_[i] = v;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.flavor() != b.flavor()) throw DimensionError("flavor mismatch in mat_mul");
    if (a.cols() != b.rows()) throw DimensionError("inner dimension mismatch in mat_mul");
    const Flavor f = a.flavor();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = Scalar::zero();
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = add(f, acc, mul(f, a(i, k), b(k, j)));
            out.set(i, j, acc);
        }
    }
    return out;
}

Vector mat_vec_mul(const Matrix& a, const Vector& x) {
    if (a.flavor() != x.flavor()) throw DimensionError("flavor mismatch in mat_vec_mul");
    if (a.cols() != x.size()) throw DimensionError("dimension mismatch in mat_vec_mul");
    const Flavor f = a.flavor();
    Vector out(f, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar acc = Scalar::zero();
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc = add(f, acc, mul(f, a(i, j), x[j]));
        out.set(i, acc);
    }
    return out;
}

Matrix scalar_col_scale(const Matrix& a, const Vector& alphas) {
    if (a.flavor() != alphas.flavor()) throw DimensionError("flavor mismatch in scalar_col_scale");
    if (alphas.size() != a.cols()) throw DimensionError("one scale factor per column required");
    const Flavor f = a.flavor();
    for (std::size_t j = 0; j < alphas.size(); ++j)
        if (alphas[j].is_zero()) throw DomainError("zero column scale factor");
    Matrix out(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, mul(f, alphas[j], a(i, j)));
    return out;
}

bool is_regular(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].is_zero()) return false;
    return true;
}

ReducedSystem preprocess_system(const Matrix& a, const Vector& b) {
    if (a.flavor() != b.flavor()) throw DimensionError("flavor mismatch in preprocess_system");
    if (a.rows() != b.size()) throw DimensionError("b length must equal the row count");
    const Flavor f = a.flavor();

    std::vector<std::size_t> kept_rows;
    std::vector<bool> col_forced(a.cols(), false);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!b[i].is_zero()) {
            kept_rows.push_back(i);
            continue;
        }
        // Zerosumfreeness: b_i = 0 forces a_ij (x) x_j = 0 for every j.
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) col_forced[j] = true;
    }

    ReducedSystem red{{}, {}, {}, Matrix(f, 0, 0), Vector(f, 0)};
    red.kept_rows = std::move(kept_rows);
    for (std::size_t j = 0; j < a.cols(); ++j)
        (col_forced[j] ? red.forced_zero_vars : red.kept_cols).push_back(j);

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> bvals;
    for (std::size_t i : red.kept_rows) {
        std::vector<Scalar> row;
        bool all_zero = true;
        for (std::size_t j : red.kept_cols) {
            row.push_back(a(i, j));
            all_zero = all_zero && a(i, j).is_zero();
        }
        if (all_zero) red.verdict = ReducedSystem::Verdict::TriviallyUnsolvable;
        rows.push_back(std::move(row));
        bvals.push_back(b[i]);
    }
    red.a = Matrix(f, std::move(rows));
    red.b = Vector(f, std::move(bvals));
    return red;
}

}  // namespace troplin
