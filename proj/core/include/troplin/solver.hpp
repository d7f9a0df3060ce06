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
 * @file solver.hpp
 *
 * The three maximal-solution methods for one-sided systems AX = b
 * (pseudo-inverse, extended Cramer's rule, normalization), the LU-condition
 * check, solution/maximality verification, and cross-method equivalence
 * reporting.
 */

#ifndef TROPLIN_SOLVER_HPP
#define TROPLIN_SOLVER_HPP

#include "troplin/determinant.hpp"
#include "troplin/matvec.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace troplin {

/// A column of the ratio matrix is all-Top (the variable is unconstrained
/// from above), so no maximal solution exists.
struct UnboundedVariableError : Error {
    UnboundedVariableError(std::string msg, std::vector<std::size_t> cols)
        : Error(std::move(msg)), columns(std::move(cols)) {}
    std::vector<std::size_t> columns;
};

/// The ratio matrix Q' with q'_ij = b_i (x) a_ij^-1, Top where a_ij = zero.
/// Q' is column-scalar-equivalent to the geometric-mean-normalized matrix,
/// so its per-column argmin sets are the same.
struct QMatrix {
    Flavor flavor;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> entries;  ///< row-major; Top allowed

    std::vector<Scalar> col_min;                       ///< <=_S-least entry per column (Top if all-Top)
    std::vector<std::vector<std::size_t>> col_argmin;  ///< rows attaining the minimum
    std::vector<std::size_t> unbounded_cols;           ///< all-Top columns

    const Scalar& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

enum class Method { PseudoInverse, Cramer, Normalization };

std::string_view method_name(Method m);

struct SolveOutcome {
    Method method;
    bool solvable = false;
    std::optional<Vector> solution;  ///< the maximal solution, present iff solvable

    /// Certificates (0-based): exactly one is set when unsolvable.
    std::optional<std::pair<std::size_t, std::size_t>> violated_inequality;  ///< (i,j) with (AA^-)_ij (x) b_j >_S b_i
    std::optional<std::size_t> uncovered_row;  ///< ratio-matrix row hosting no column minimum
};

struct MethodPairEquality {
    Method first;
    Method second;
    bool equal = false;
};

struct EquivalenceReport {
    std::vector<SolveOutcome> outcomes;
    std::vector<MethodPairEquality> pairwise_equal;  ///< pairs where both methods ran and are solvable
    std::optional<bool> lu_condition_holds;          ///< set when square with nonzero diagonal
    std::optional<bool> diagonal_solution_check;     ///< set when the LU condition holds
    bool theorem_violation = false;                  ///< two solvable methods disagreed
    /// Normalization solvable while the pseudo-inverse criterion failed; the
    /// converse equivalence direction is flagged, not asserted.
    bool normalization_only = false;
};

/// Pseudo-inverse method: reports solvable iff (AA^-)_ij (x) b_j <=_S b_i
/// for all i,j; then X* = A^- (x) b is the maximal solution. The criterion
/// is sufficient but not necessary for system solvability; normalization
/// decides it exactly.
SolveOutcome solve_pseudo_inverse(const Matrix& a, const Vector& b);

/// A with column i replaced by b (the Cramer matrix A_[i]).
Matrix column_replace(const Matrix& a, const Vector& b, std::size_t i);

/// Extended Cramer's rule: same solvability criterion as the pseudo-inverse
/// method; x*_i = det_eps(A)^-1 (x) det_eps(A_[i]).
SolveOutcome solve_cramer(const Matrix& a, const Vector& b);

/// Builds Q' with its column minima and argmin sets. b must be regular.
QMatrix ratio_matrix(const Matrix& a, const Vector& b);

/// Normalization method: x_j = column-j minimum of Q'; solvable iff every
/// row hosts at least one column minimum. Throws UnboundedVariableError on
/// all-Top columns.
SolveOutcome solve_normalization(const Matrix& a, const Vector& b);

/// LU-shape inequality family: a_ik (x) a_kk^-1 <=_S b_i (x) b_k^-1 for
/// every off-diagonal (i,k). Requires a nonzero diagonal and regular b.
bool check_lu_condition(const Matrix& a, const Vector& b);

/// True iff A (x) x = b exactly.
bool verify_solution(const Matrix& a, const Vector& b, const Vector& x);

/// Brute-force maximality check over the grid of per-equation tight values
/// {b_i (x) a_ij^-1 : a_ij != zero}. Exponential; intended for n <= 4.
/// x must already be a solution.
bool maximality_oracle(const Matrix& a, const Vector& b, const Vector& x);

/// Runs every applicable method (all three for square A with nonzero
/// det_eps and regular b, normalization alone otherwise) and cross-checks
/// the solutions.
EquivalenceReport solve_all(const Matrix& a, const Vector& b);

}  // namespace troplin

#endif  // TROPLIN_SOLVER_HPP
