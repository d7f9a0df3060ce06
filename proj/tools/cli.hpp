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
 * @file cli.hpp
 *
 * Command implementations behind the troplin executable. Exit codes:
 * 0 = solvable (all requested methods), 1 = unsolvable, 2 = input or usage
 * error, 3 = cross-method theorem violation.
 */

#ifndef TROPLIN_CLI_HPP
#define TROPLIN_CLI_HPP

#include <iosfwd>
#include <string>

namespace troplin::cli {

inline constexpr int kExitSolvable = 0;
inline constexpr int kExitUnsolvable = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTheoremViolation = 3;

/// Solves the system in input_path with the requested method
/// ("pseudo-inverse", "cramer", "normalization", or "all") and writes the
/// result document to output_path ("-" = stdout). Irregular b is handled by
/// zero-entry preprocessing; reported solutions are full length.
int cmd_solve(const std::string& input_path, const std::string& method,
              const std::string& output_path, std::ostream& out, std::ostream& err);

/// Prints {plus, minus, det_eps} of the (square) system matrix.
int cmd_det(const std::string& input_path, std::ostream& out, std::ostream& err);

/// Prints the pseudo-inverse A^- and the product AA^-.
int cmd_pinv(const std::string& input_path, std::ostream& out, std::ostream& err);

}  // namespace troplin::cli

#endif  // TROPLIN_CLI_HPP
