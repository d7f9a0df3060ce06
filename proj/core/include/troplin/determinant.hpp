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
 * @file determinant.hpp
 *
 * Bideterminant, epsilon-determinant (the tropical permanent under the
 * identity epsilon-function), epsilon-adjoint, and pseudo-inverse.
 */

#ifndef TROPLIN_DETERMINANT_HPP
#define TROPLIN_DETERMINANT_HPP

#include "troplin/matvec.hpp"

namespace troplin {

/// det_eps(A) = 0 where a nonzero determinant is required.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// (+)-aggregates of permutation diagonal products, split by parity.
struct Bideterminant {
    Scalar plus;   ///< over even permutations
    Scalar minus;  ///< over odd permutations (zero for n = 1)
};

/// Largest order accepted by the permutation-enumeration evaluators.
inline constexpr std::size_t kEnumerationLimit = 9;

/// Enumerates all n! permutations, splitting by inversion-count parity.
/// Restricted to n <= kEnumerationLimit.
Bideterminant bideterminant(const Matrix& a);

/// det_eps(A) = |A|+ (+) eps(|A|-); under the identity epsilon-function this
/// is the (+)-sum over ALL permutations, i.e. the <=_S-greatest permutation
/// diagonal product. Enumerates for n <= kEnumerationLimit, otherwise falls
/// back to the assignment evaluation.
Scalar det_eps(const Matrix& a);

/// Same value as det_eps, computed as an optimal-assignment problem over the
/// <=_S order (Kuhn-Munkres on the multiplicative group of the semifield;
/// zero entries are forbidden cells). Returns zero when every permutation
/// hits a zero entry. Polynomial in n.
Scalar det_eps_assignment(const Matrix& a);

/// The epsilon-adjoint: entry (i,j) is det_eps of the minor A(j|i). For
/// n = 1 the adjoint is [[one]] so that the pseudo-inverse specializes to
/// scalar inversion.
Matrix adj_eps(const Matrix& a);

struct PseudoInverse {
    Matrix a_minus;  ///< det_eps(A)^-1 (x) adj_eps(A)
    Scalar det;      ///< det_eps(A), nonzero
};

/// A^- = det_eps(A)^-1 adj_eps(A); requires det_eps(A) != zero.
PseudoInverse pseudo_inverse(const Matrix& a);

/// A with row j replaced by row i (the A_r(i => j) of the adjoint identity
/// A adj_eps(A) = (det_eps(A_r(i => j)))).
Matrix replace_row(const Matrix& a, std::size_t i, std::size_t j);

}  // namespace troplin

#endif  // TROPLIN_DETERMINANT_HPP
