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

#include "troplin/solver.hpp"

#include <algorithm>

namespace troplin {

namespace {

void require_regular(const Vector& b) {
    if (!is_regular(b))
        throw DomainError("b must be regular; run preprocess_system first");
}

void require_system(const Matrix& a, const Vector& b) {
    if (a.flavor() != b.flavor()) throw DimensionError("flavor mismatch in solver");
    if (a.rows() != b.size()) throw DimensionError("b length must equal the row count");
}

/// The criterion shared by the pseudo-inverse and Cramer methods:
/// (AA^-)_ij (x) b_j <=_S b_i.
std::optional<std::pair<std::size_t, std::size_t>> criterion_violation(
    const Matrix& a, const Matrix& a_minus, const Vector& b) {
    const Flavor f = a.flavor();
    const Matrix m = mat_mul(a, a_minus);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!leq_s(f, mul(f, m(i, j), b[j]), b[i])) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::PseudoInverse: return "pseudo-inverse";
        case Method::Cramer: return "cramer";
        case Method::Normalization: return "normalization";
    }
    throw Error("unknown method");
}

SolveOutcome solve_pseudo_inverse(const Matrix& a, const Vector& b) {
    require_system(a, b);
    require_regular(b);
    const PseudoInverse pinv = pseudo_inverse(a);  // throws if non-square or singular

    SolveOutcome out{Method::PseudoInverse};
    if (auto violated = criterion_violation(a, pinv.a_minus, b)) {
        out.violated_inequality = *violated;
        return out;
    }
    out.solvable = true;
    out.solution = mat_vec_mul(pinv.a_minus, b);
    return out;
}

Matrix column_replace(const Matrix& a, const Vector& b, std::size_t i) {
    if (i >= a.cols()) throw DimensionError("column index out of range");
    if (b.size() != a.rows()) throw DimensionError("b length must equal the row count");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, i, b[r]);
    return out;
}

SolveOutcome solve_cramer(const Matrix& a, const Vector& b) {
    require_system(a, b);
    require_regular(b);
    const Flavor f = a.flavor();
    const PseudoInverse pinv = pseudo_inverse(a);

    SolveOutcome out{Method::Cramer};
    if (auto violated = criterion_violation(a, pinv.a_minus, b)) {
        out.violated_inequality = *violated;
        return out;
    }
    const Scalar det_inv = inv(f, pinv.det);
    Vector x(f, a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        x.set(i, mul(f, det_inv, det_eps(column_replace(a, b, i))));
    out.solvable = true;
    out.solution = std::move(x);
    return out;
}

QMatrix ratio_matrix(const Matrix& a, const Vector& b) {
    require_system(a, b);
    require_regular(b);
    const Flavor f = a.flavor();

    QMatrix q;
    q.flavor = f;
    q.rows = a.rows();
    q.cols = a.cols();
    q.entries.reserve(q.rows * q.cols);
    for (std::size_t i = 0; i < q.rows; ++i)
        for (std::size_t j = 0; j < q.cols; ++j)
            q.entries.push_back(a(i, j).is_zero() ? Scalar::top()
                                                  : mul(f, b[i], inv(f, a(i, j))));

    q.col_min.assign(q.cols, Scalar::top());
    q.col_argmin.assign(q.cols, {});
    for (std::size_t j = 0; j < q.cols; ++j) {
        for (std::size_t i = 0; i < q.rows; ++i) {
            const Scalar& e = q.at(i, j);
            if (e.is_top()) continue;
            if (lt_s(f, e, q.col_min[j])) {
                q.col_min[j] = e;
                q.col_argmin[j] = {i};
            } else if (e == q.col_min[j]) {
                q.col_argmin[j].push_back(i);
            }
        }
        if (q.col_min[j].is_top()) q.unbounded_cols.push_back(j);
    }
    return q;
}

SolveOutcome solve_normalization(const Matrix& a, const Vector& b) {
    const QMatrix q = ratio_matrix(a, b);
    if (!q.unbounded_cols.empty())
        throw UnboundedVariableError("all-zero column: maximal solution is undefined",
                                     q.unbounded_cols);

    SolveOutcome out{Method::Normalization};
    std::vector<bool> covered(q.rows, false);
    for (std::size_t j = 0; j < q.cols; ++j)
        for (std::size_t i : q.col_argmin[j]) covered[i] = true;
    for (std::size_t i = 0; i < q.rows; ++i) {
        if (!covered[i]) {
            out.uncovered_row = i;
            return out;
        }
    }
    out.solvable = true;
    out.solution = Vector(q.flavor, q.col_min);
    return out;
}

bool check_lu_condition(const Matrix& a, const Vector& b) {
    require_system(a, b);
    require_regular(b);
    if (!a.square()) throw DimensionError("LU condition requires a square matrix");
    const Flavor f = a.flavor();
    for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(k, k).is_zero()) throw DomainError("LU condition requires a nonzero diagonal");
    // The lower and upper index families together cover every off-diagonal
    // pair (i,k): a_ik (x) a_kk^-1 <=_S b_i (x) b_k^-1.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (i == k) continue;
            const Scalar lhs = mul(f, a(i, k), inv(f, a(k, k)));
            const Scalar rhs = mul(f, b[i], inv(f, b[k]));
            if (!leq_s(f, lhs, rhs)) return false;
        }
    return true;
}

bool verify_solution(const Matrix& a, const Vector& b, const Vector& x) {
    require_system(a, b);
    if (x.size() != a.cols()) throw DimensionError("x length must equal the column count");
    return mat_vec_mul(a, x) == b;
}

bool maximality_oracle(const Matrix& a, const Vector& b, const Vector& x) {
    if (!verify_solution(a, b, x)) throw DomainError("maximality_oracle requires a solution");
    const Flavor f = a.flavor();

    // Per-column grid of tight values b_i (x) a_ij^-1. Every solution is
    // componentwise below the column minima of Q', which live on this grid,
    // so a non-maximal x always has a grid counterexample.
    std::vector<std::vector<Scalar>> grid(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) grid[j].push_back(mul(f, b[i], inv(f, a(i, j))));
        if (grid[j].empty())
            throw UnboundedVariableError("all-zero column in maximality_oracle", {j});
    }

    Vector candidate(f, a.cols());
    std::vector<std::size_t> pick(a.cols(), 0);
    while (true) {
        for (std::size_t j = 0; j < a.cols(); ++j) candidate.set(j, grid[j][pick[j]]);
        if (verify_solution(a, b, candidate)) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!leq_s(f, candidate[j], x[j])) return false;
        }
        std::size_t j = 0;
        while (j < a.cols() && ++pick[j] == grid[j].size()) pick[j++] = 0;
        if (j == a.cols()) break;
    }
    return true;
}

EquivalenceReport solve_all(const Matrix& a, const Vector& b) {
    require_system(a, b);
    require_regular(b);
    const Flavor f = a.flavor();

    EquivalenceReport report;
    bool pseudo_applicable = a.square() && !det_eps_assignment(a).is_zero();
    if (pseudo_applicable) {
        report.outcomes.push_back(solve_pseudo_inverse(a, b));
        report.outcomes.push_back(solve_cramer(a, b));
    }
    report.outcomes.push_back(solve_normalization(a, b));

    for (std::size_t i = 0; i < report.outcomes.size(); ++i)
        for (std::size_t j = i + 1; j < report.outcomes.size(); ++j) {
            const SolveOutcome& lhs = report.outcomes[i];
            const SolveOutcome& rhs = report.outcomes[j];
            if (!lhs.solvable || !rhs.solvable) continue;
            const bool equal = *lhs.solution == *rhs.solution;
            report.pairwise_equal.push_back({lhs.method, rhs.method, equal});
            if (!equal) report.theorem_violation = true;
        }

    if (pseudo_applicable) {
        const bool pseudo_solvable = report.outcomes.front().solvable;
        const bool norm_solvable = report.outcomes.back().solvable;
        if (norm_solvable && !pseudo_solvable) report.normalization_only = true;
    }

    bool diag_nonzero = a.square();
    for (std::size_t k = 0; diag_nonzero && k < a.cols(); ++k)
        diag_nonzero = !a(k, k).is_zero();
    if (diag_nonzero) {
        report.lu_condition_holds = check_lu_condition(a, b);
        if (*report.lu_condition_holds) {
            // LU-shaped systems: the normalization solution must be the
            // diagonal ratios (b_k (x) a_kk^-1).
            const SolveOutcome& norm = report.outcomes.back();
            bool ok = norm.solvable;
            if (ok) {
                for (std::size_t k = 0; k < a.cols(); ++k)
                    if ((*norm.solution)[k] != mul(f, b[k], inv(f, a(k, k)))) ok = false;
            }
            report.diagonal_solution_check = ok;
        }
    }
    return report;
}

}  // namespace troplin
