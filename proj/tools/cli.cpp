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

#include "cli.hpp"

#include "troplin/io.hpp"
#include "troplin/solver.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace troplin::cli {

namespace {

using nlohmann::ordered_json;

void write_document(const ordered_json& doc, const std::string& output_path,
                    std::ostream& out, std::ostream& err) {
    if (output_path == "-") {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream file(output_path);
    if (!file) {
        err << "cannot open output file: " << output_path << "\n";
        throw ParseError("cannot open output file: " + output_path);
    }
    file << doc.dump(2) << "\n";
}

/// Expands a reduced-system solution back to full length, with zero at the
/// forced variables.
Vector expand_solution(const ReducedSystem& red, std::size_t n, const Vector& reduced) {
    Vector full(reduced.flavor(), n);
    for (std::size_t k = 0; k < red.kept_cols.size(); ++k)
        full.set(red.kept_cols[k], reduced[k]);
    return full;  // forced variables stay at the default zero
}

ordered_json render_outcome(const SolveOutcome& outcome, const ReducedSystem& red,
                            std::size_t n) {
    ordered_json block;
    block["solvable"] = outcome.solvable;
    if (outcome.solvable) {
        block["solution"] = render_vector(expand_solution(red, n, *outcome.solution));
    } else if (outcome.violated_inequality) {
        const auto [i, j] = *outcome.violated_inequality;
        block["certificate"] = {{"type", "violated-inequality"},
                                {"row", red.kept_rows[i] + 1},
                                {"col", red.kept_rows[j] + 1}};
    } else if (outcome.uncovered_row) {
        block["certificate"] = {{"type", "uncovered-row"},
                                {"row", red.kept_rows[*outcome.uncovered_row] + 1}};
    }
    return block;
}

ordered_json render_equivalence(const EquivalenceReport& report) {
    ordered_json eq;
    eq["pairwise_equal"] = ordered_json::object();
    for (const auto& pair : report.pairwise_equal) {
        const std::string key = std::string(method_name(pair.first)) + "/" +
                                std::string(method_name(pair.second));
        eq["pairwise_equal"][key] = pair.equal;
    }
    eq["lu_condition_holds"] =
        report.lu_condition_holds ? ordered_json(*report.lu_condition_holds) : ordered_json();
    eq["diagonal_solution_check"] = report.diagonal_solution_check
                                        ? ordered_json(*report.diagonal_solution_check)
                                        : ordered_json();
    eq["theorem_violation"] = report.theorem_violation;
    eq["normalization_only"] = report.normalization_only;
    return eq;
}

ordered_json render_preprocessing(const ReducedSystem& red) {
    ordered_json pre;
    auto rows = ordered_json::array();
    for (std::size_t i : red.kept_rows) rows.push_back(i + 1);
    auto forced = ordered_json::array();
    for (std::size_t j : red.forced_zero_vars) forced.push_back(j + 1);
    pre["kept_rows"] = std::move(rows);
    pre["forced_zero_variables"] = std::move(forced);
    pre["verdict"] = red.verdict == ReducedSystem::Verdict::Reduced ? "reduced"
                                                                    : "trivially-unsolvable";
    return pre;
}

}  // namespace

int cmd_solve(const std::string& input_path, const std::string& method,
              const std::string& output_path, std::ostream& out, std::ostream& err) {
    try {
        if (method != "pseudo-inverse" && method != "cramer" && method != "normalization" &&
            method != "all") {
            err << "unknown method: " << method << "\n";
            return kExitUsage;
        }
        const SystemDocument doc = load_system(input_path);
        const std::size_t n = doc.a.cols();
        const ReducedSystem red = preprocess_system(doc.a, doc.b);

        ordered_json result;
        result["semifield"] = std::string(flavor_name(doc.flavor));
        result["method"] = method;

        if (red.verdict == ReducedSystem::Verdict::TriviallyUnsolvable) {
            result["solvable"] = false;
            result["methods"] = ordered_json::object();
            result["preprocessing"] = render_preprocessing(red);
            result["residual_check"] = true;
            write_document(result, output_path, out, err);
            return kExitUnsolvable;
        }

        std::vector<SolveOutcome> outcomes;
        std::optional<EquivalenceReport> report;
        if (method == "all") {
            report = solve_all(red.a, red.b);
            outcomes = report->outcomes;
        } else if (method == "pseudo-inverse") {
            outcomes.push_back(solve_pseudo_inverse(red.a, red.b));
        } else if (method == "cramer") {
            outcomes.push_back(solve_cramer(red.a, red.b));
        } else {
            outcomes.push_back(solve_normalization(red.a, red.b));
        }

        bool all_solvable = !outcomes.empty();
        bool residual_ok = true;
        auto methods = ordered_json::object();
        for (const SolveOutcome& outcome : outcomes) {
            all_solvable = all_solvable && outcome.solvable;
            if (outcome.solvable)
                residual_ok = residual_ok &&
                              verify_solution(doc.a, doc.b, expand_solution(red, n, *outcome.solution));
            methods[std::string(method_name(outcome.method))] = render_outcome(outcome, red, n);
        }

        result["solvable"] = all_solvable;
        result["methods"] = std::move(methods);
        if (report) result["equivalence"] = render_equivalence(*report);
        if (!red.identity_reduction(doc.a.rows(), n))
            result["preprocessing"] = render_preprocessing(red);
        result["residual_check"] = residual_ok;
        write_document(result, output_path, out, err);

        if (report && report->theorem_violation) return kExitTheoremViolation;
        return all_solvable ? kExitSolvable : kExitUnsolvable;
    } catch (const UnboundedVariableError& e) {
        err << "unbounded variable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularMatrixError& e) {
        err << "singular system matrix: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_det(const std::string& input_path, std::ostream& out, std::ostream& err) {
    try {
        const SystemDocument doc = load_system(input_path);
        const Bideterminant d = bideterminant(doc.a);
        ordered_json result;
        result["semifield"] = std::string(flavor_name(doc.flavor));
        result["plus"] = scalar_to_string(d.plus);
        result["minus"] = scalar_to_string(d.minus);
        result["det_eps"] = scalar_to_string(det_eps(doc.a));
        out << result.dump(2) << "\n";
        return kExitSolvable;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_pinv(const std::string& input_path, std::ostream& out, std::ostream& err) {
    try {
        const SystemDocument doc = load_system(input_path);
        const PseudoInverse pinv = pseudo_inverse(doc.a);
        ordered_json result;
        result["semifield"] = std::string(flavor_name(doc.flavor));
        result["det_eps"] = scalar_to_string(pinv.det);
        result["pseudo_inverse"] = render_matrix(pinv.a_minus);
        result["product"] = render_matrix(mat_mul(doc.a, pinv.a_minus));
        out << result.dump(2) << "\n";
        return kExitSolvable;
    } catch (const SingularMatrixError& e) {
        err << "singular system matrix: " << e.what() << "\n";
        return kExitUnsolvable;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace troplin::cli
