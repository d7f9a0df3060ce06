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
 * @file semifield.hpp
 *
 * Scalars over the four idempotent semifields (max-plus, min-plus,
 * max-times, min-times) with exact rational payloads, plus the induced
 * total order.
 */

#ifndef TROPLIN_SEMIFIELD_HPP
#define TROPLIN_SEMIFIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace troplin {

using Rational = boost::multiprecision::cpp_rational;

/// Base class for all troplin errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand outside the semifield carrier (Top in arithmetic, inversion of
/// zero, negative payload in a times-flavor, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Malformed scalar or document text.
struct ParseError : Error {
    using Error::Error;
};

/// Which idempotent semifield a scalar or matrix lives in.
///
/// Each flavor fixes the carrier, the idempotent addition, the group
/// multiplication, both identities and the total order a <=_S b <=> a (+) b = b:
///
///   max-plus:  rationals + {-inf},  (+) = max, (x) = +, zero = -inf, one = 0
///   min-plus:  rationals + {+inf},  (+) = min, (x) = +, zero = +inf, one = 0
///   max-times: nonnegative rationals, (+) = max, (x) = *, zero = 0,  one = 1
///   min-times: positive rationals + {+inf}, (+) = min, (x) = *, zero = +inf, one = 1
///
/// In max-flavors <=_S is the numeric order; in min-flavors it is reversed.
enum class Flavor { MaxPlus, MinPlus, MaxTimes, MinTimes };

constexpr bool is_min_flavor(Flavor f) {
    return f == Flavor::MinPlus || f == Flavor::MinTimes;
}

constexpr bool is_times_flavor(Flavor f) {
    return f == Flavor::MaxTimes || f == Flavor::MinTimes;
}

std::string_view flavor_name(Flavor f);

/// Parses "max-plus", "min-plus", "max-times", "min-times" (case-insensitive).
Flavor flavor_from_string(std::string_view name);

/// A semifield element: an exact rational payload, the symbolic semifield
/// zero, or the symbolic Top sentinel 0^- used inside ratio matrices.
///
/// Top is strictly greater than every carrier element in <=_S. It never
/// appears in system data or solutions; arithmetic on it is a DomainError.
class Scalar {
public:
    enum class Kind { Zero, Finite, Top };

    Scalar() : kind_(Kind::Zero) {}

    static Scalar zero() { return Scalar(); }
    static Scalar top() {
        Scalar s;
        s.kind_ = Kind::Top;
        return s;
    }
    static Scalar finite(Rational v) {
        Scalar s;
        s.kind_ = Kind::Finite;
        s.value_ = std::move(v);
        return s;
    }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_top() const { return kind_ == Kind::Top; }

    /// Rational payload; only meaningful for finite scalars.
    const Rational& value() const {
        if (!is_finite()) throw DomainError("scalar has no rational payload");
        return value_;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Kind kind_;
    Rational value_;
};

/// Validating constructor: checks the payload against the flavor's carrier.
/// In max-times a payload of 0 IS the semifield zero and is normalized to the
/// symbolic form; min-times rejects nonpositive payloads, max-times negative
/// ones.
Scalar make_scalar(Flavor f, Rational v);

/// The multiplicative identity: 0 for plus-flavors, 1 for times-flavors.
Scalar one(Flavor f);

/// a (+) b. Idempotent, commutative, zero-neutral; equals the <=_S-greater
/// operand. Top operands are rejected.
Scalar add(Flavor f, const Scalar& a, const Scalar& b);

/// a (x) b. Zero is absorbing; Top operands are rejected.
Scalar mul(Flavor f, const Scalar& a, const Scalar& b);

/// Multiplicative inverse; a must be a nonzero carrier element.
Scalar inv(Flavor f, const Scalar& a);

/// The total order a <=_S b <=> a (+) b = b. Zero is least, Top greatest.
bool leq_s(Flavor f, const Scalar& a, const Scalar& b);

/// Strict variant of leq_s.
bool lt_s(Flavor f, const Scalar& a, const Scalar& b);

/// The epsilon-function used throughout: the identity map.
inline const Scalar& epsilon(const Scalar& a) { return a; }

/// Text form: "p", "p/q" (q > 0, reduced), or "zero". Top never serializes.
std::string scalar_to_string(const Scalar& s);

/// Parses the text form above, validating against the flavor's carrier.
Scalar scalar_from_string(Flavor f, std::string_view text);

}  // namespace troplin

#endif  // TROPLIN_SEMIFIELD_HPP
