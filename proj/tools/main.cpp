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

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for one-sided linear systems over idempotent semifields"};
    app.require_subcommand(1);

    std::string input;
    std::string method = "all";
    std::string output = "-";

    auto* solve = app.add_subcommand("solve", "Solve AX = b and report per-method results");
    solve->add_option("--input", input, "System document (JSON)")->required();
    solve->add_option("--method", method,
                      "pseudo-inverse | cramer | normalization | all (default: all)");
    solve->add_option("--output", output, "Result path, or - for stdout (default: -)");

    auto* det = app.add_subcommand("det", "Print bideterminant and eps-determinant");
    det->add_option("--input", input, "System document (JSON)")->required();

    auto* pinv = app.add_subcommand("pinv", "Print the pseudo-inverse A^- and AA^-");
    pinv->add_option("--input", input, "System document (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : troplin::cli::kExitUsage;
    }

    if (solve->parsed()) return troplin::cli::cmd_solve(input, method, output, std::cout, std::cerr);
    if (det->parsed()) return troplin::cli::cmd_det(input, std::cout, std::cerr);
    return troplin::cli::cmd_pinv(input, std::cout, std::cerr);
}
