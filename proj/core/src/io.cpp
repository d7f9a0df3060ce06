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

#include "troplin/io.hpp"

#include <fstream>

namespace troplin {

SystemDocument parse_system(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("system document must be a JSON object");
    for (const char* key : {"semifield", "A", "b"})
        if (!doc.contains(key)) throw ParseError(std::string("missing key: ") + key);

    const Flavor f = flavor_from_string(doc.at("semifield").get<std::string>());

    const auto& ja = doc.at("A");
    if (!ja.is_array() || ja.empty()) throw ParseError("A must be a nonempty array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& jrow : ja) {
        if (!jrow.is_array() || jrow.empty()) throw ParseError("each row of A must be a nonempty array");
        std::vector<Scalar> row;
        for (const auto& cell : jrow)
            row.push_back(scalar_from_string(f, cell.get<std::string>()));
        rows.push_back(std::move(row));
    }

    const auto& jb = doc.at("b");
    if (!jb.is_array()) throw ParseError("b must be an array");
    std::vector<Scalar> bvals;
    for (const auto& cell : jb) bvals.push_back(scalar_from_string(f, cell.get<std::string>()));

    Matrix a(f, std::move(rows));
    Vector b(f, std::move(bvals));
    if (b.size() != a.rows()) throw ParseError("b length must equal the row count of A");
    return {f, std::move(a), std::move(b)};
}

SystemDocument load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    try {
        return parse_system(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed system document in " + path + ": " + e.what());
    }
}

nlohmann::ordered_json render_vector(const Vector& v) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_to_string(v[i]));
    return out;
}

nlohmann::ordered_json render_matrix(const Matrix& m) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::ordered_json render_system(const SystemDocument& doc) {
    nlohmann::ordered_json out;
    out["semifield"] = std::string(flavor_name(doc.flavor));
    out["A"] = render_matrix(doc.a);
    out["b"] = render_vector(doc.b);
    return out;
}

}  // namespace troplin
