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

#include "troplin/determinant.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace troplin {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (!a.square() || a.rows() == 0)
        throw DimensionError(std::string(op) + " requires a nonempty square matrix");
}

bool odd_parity(const std::vector<std::size_t>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 1;
}

Scalar diagonal_product(const Matrix& a, const std::vector<std::size_t>& perm) {
    const Flavor f = a.flavor();
    Scalar prod = one(f);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (a(i, perm[i]).is_zero()) return Scalar::zero();
        prod = mul(f, prod, a(i, perm[i]));
    }
    return prod;
}

/// Maximum-weight perfect matching w.r.t. <=_S where weights combine by (x).
/// Kuhn-Munkres with potentials, run on the totally ordered abelian group
/// (S \ {0}, (x), <=_S); zero entries are forbidden cells. Returns the
/// matched weight product, or zero when no matching avoids forbidden cells.
Scalar assignment_value(const Matrix& a) {
    const Flavor f = a.flavor();
    const std::size_t n = a.rows();

    // Minimize the product of costs c_ij = a_ij^-1; inversion flips <=_S, so
    // the minimum-cost matching is the <=_S-greatest weight matching.
    std::vector<std::vector<std::optional<Scalar>>> cost(n, std::vector<std::optional<Scalar>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) cost[i][j] = inv(f, a(i, j));

    // 1-based arrays; column 0 is the virtual start of each augmenting path.
    std::vector<Scalar> u(n + 1, one(f)), v(n + 1, one(f));
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<std::optional<Scalar>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            std::optional<Scalar> delta;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j] || !cost[i0 - 1][j - 1]) continue;
                const Scalar cur =
                    mul(f, *cost[i0 - 1][j - 1], mul(f, inv(f, u[i0]), inv(f, v[j])));
                if (!minv[j] || lt_s(f, cur, *minv[j])) {
                    minv[j] = cur;
                    way[j] = j0;
                }
            }
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j] || !minv[j]) continue;
                if (!delta || lt_s(f, *minv[j], *delta)) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            if (!delta) return Scalar::zero();  // row i unmatched: no zero-free permutation
            const Scalar delta_inv = inv(f, *delta);
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] = mul(f, u[match[j]], *delta);
                    v[j] = mul(f, v[j], delta_inv);
                } else if (minv[j]) {
                    minv[j] = mul(f, *minv[j], delta_inv);
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Scalar value = one(f);
    for (std::size_t j = 1; j <= n; ++j)
        value = mul(f, value, a(match[j] - 1, j - 1));
    return value;
}

}  // namespace

Bideterminant bideterminant(const Matrix& a) {
    require_square(a, "bideterminant");
    const std::size_t n = a.rows();
    if (n > kEnumerationLimit)
        throw DimensionError("bideterminant enumeration is limited to n <= 9");
    const Flavor f = a.flavor();
    if (n == 1) return {a(0, 0), Scalar::zero()};

    Bideterminant d{Scalar::zero(), Scalar::zero()};
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const Scalar prod = diagonal_product(a, perm);
        Scalar& side = odd_parity(perm) ? d.minus : d.plus;
        side = add(f, side, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
}

Scalar det_eps(const Matrix& a) {
    require_square(a, "det_eps");
    if (a.rows() > kEnumerationLimit) return assignment_value(a);
    const Bideterminant d = bideterminant(a);
    return add(a.flavor(), d.plus, epsilon(d.minus));
}

Scalar det_eps_assignment(const Matrix& a) {
    require_square(a, "det_eps_assignment");
    return assignment_value(a);
}

Matrix adj_eps(const Matrix& a) {
    require_square(a, "adj_eps");
    const Flavor f = a.flavor();
    const std::size_t n = a.rows();
    if (n == 1) {
        Matrix out(f, 1, 1);
        out.set(0, 0, one(f));
        return out;
    }
    Matrix out(f, n, n);
    Matrix minor(f, n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj entry (i,j) is det_eps of the minor A(j|i): drop row j, column i.
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.set(mr, mc, a(r, c));
                    ++mc;
                }
                ++mr;
            }
            out.set(i, j, det_eps(minor));
        }
    }
    return out;
}

PseudoInverse pseudo_inverse(const Matrix& a) {
    require_square(a, "pseudo_inverse");
    const Flavor f = a.flavor();
    const Scalar det = det_eps_assignment(a);
    if (det.is_zero()) throw SingularMatrixError("det_eps(A) is zero");
    const Scalar det_inv = inv(f, det);
    Matrix adj = adj_eps(a);
    Matrix out(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, mul(f, det_inv, adj(i, j)));
    return {std::move(out), det};
}

Matrix replace_row(const Matrix& a, std::size_t i, std::size_t j) {
    if (i >= a.rows() || j >= a.rows()) throw DimensionError("row index out of range");
    Matrix out = a;
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(j, c, a(i, c));
    return out;
}

}  // namespace troplin
