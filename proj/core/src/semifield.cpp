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

#include "troplin/semifield.hpp"

#include <algorithm>
#include <cctype>

namespace troplin {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view flavor_name(Flavor f) {
    switch (f) {
        case Flavor::MaxPlus: return "max-plus";
        case Flavor::MinPlus: return "min-plus";
        case Flavor::MaxTimes: return "max-times";
        case Flavor::MinTimes: return "min-times";
    }
    throw Error("unknown flavor");
}

Flavor flavor_from_string(std::string_view name) {
    const std::string n = lower(name);
    if (n == "max-plus") return Flavor::MaxPlus;
    if (n == "min-plus") return Flavor::MinPlus;
    if (n == "max-times") return Flavor::MaxTimes;
    if (n == "min-times") return Flavor::MinTimes;
    throw ParseError("unknown semifield flavor: " + std::string(name));
}

Scalar make_scalar(Flavor f, Rational v) {
    if (f == Flavor::MaxTimes) {
        if (v < 0) throw DomainError("max-times carrier is nonnegative");
        if (v == 0) return Scalar::zero();
    } else if (f == Flavor::MinTimes) {
        if (v <= 0) throw DomainError("min-times carrier is positive");
    }
    return Scalar::finite(std::move(v));
}

Scalar one(Flavor f) {
    return Scalar::finite(is_times_flavor(f) ? Rational(1) : Rational(0));
}

Scalar add(Flavor f, const Scalar& a, const Scalar& b) {
    if (a.is_top() || b.is_top()) throw DomainError("Top is not a carrier element");
    // (+) picks the <=_S-greater operand; Zero is the <=_S-least element.
    return leq_s(f, a, b) ? b : a;
}

Scalar mul(Flavor f, const Scalar& a, const Scalar& b) {
    if (a.is_top() || b.is_top()) throw DomainError("Top is not a carrier element");
    if (a.is_zero() || b.is_zero()) return Scalar::zero();
    return is_times_flavor(f) ? Scalar::finite(a.value() * b.value())
                              : Scalar::finite(a.value() + b.value());
}

Scalar inv(Flavor f, const Scalar& a) {
    if (a.is_top()) throw DomainError("Top is not a carrier element");
    if (a.is_zero()) throw DomainError("the semifield zero has no multiplicative inverse");
    return is_times_flavor(f) ? Scalar::finite(1 / a.value())
                              : Scalar::finite(-a.value());
}

bool leq_s(Flavor f, const Scalar& a, const Scalar& b) {
    if (a == b) return true;
    if (a.is_zero() || b.is_top()) return true;
    if (b.is_zero() || a.is_top()) return false;
    return is_min_flavor(f) ? a.value() >= b.value() : a.value() <= b.value();
}

bool lt_s(Flavor f, const Scalar& a, const Scalar& b) {
    return a != b && leq_s(f, a, b);
}

std::string scalar_to_string(const Scalar& s) {
    if (s.is_zero()) return "zero";
    if (s.is_top()) throw DomainError("Top has no serialized form");
    const Rational& v = s.value();
    std::string out = numerator(v).str();
    if (denominator(v) != 1) out += "/" + denominator(v).str();
    return out;
}

Scalar scalar_from_string(Flavor f, std::string_view text) {
    if (lower(text) == "zero") return Scalar::zero();
    const auto slash = text.find('/');
    const auto parse_int = [](std::string_view part) {
        if (part.empty()) throw ParseError("empty integer in scalar");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ParseError("sign with no digits in scalar");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("invalid scalar text: " + std::string(part));
        return boost::multiprecision::cpp_int(std::string(part));
    };
    try {
        if (slash == std::string_view::npos) {
            return make_scalar(f, Rational(parse_int(text)));
        }
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in scalar: " + std::string(text));
        return make_scalar(f, Rational(num, den));
    } catch (const DomainError& e) {
        throw ParseError("scalar '" + std::string(text) + "' outside the " +
                         std::string(flavor_name(f)) + " carrier: " + e.what());
    }
}

}  // namespace troplin
