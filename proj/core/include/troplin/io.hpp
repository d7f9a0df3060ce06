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
 * @file io.hpp
 *
 * JSON system documents: {"semifield": <flavor>, "A": [[...]], "b": [...]}
 * with scalar strings "p", "p/q", or "zero".
 */

#ifndef TROPLIN_IO_HPP
#define TROPLIN_IO_HPP

#include "troplin/matvec.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace troplin {

struct SystemDocument {
    Flavor flavor;
    Matrix a;
    Vector b;
};

SystemDocument parse_system(const nlohmann::json& doc);
SystemDocument load_system(const std::string& path);

/// Canonical form: flavor name, then A, then b; scalars as reduced strings.
nlohmann::ordered_json render_system(const SystemDocument& doc);

nlohmann::ordered_json render_vector(const Vector& v);
nlohmann::ordered_json render_matrix(const Matrix& m);

}  // namespace troplin

#endif  // TROPLIN_IO_HPP
