// Copyright 2026 The fqcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FQCOVER_ERRORS_HPP
#define FQCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqcover {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The base of a field configuration is not a prime number.
struct NonPrimeBase : Error {
    explicit NonPrimeBase(const std::string& what) : Error(what) {}
};

/// A degree argument is outside the accepted range.
struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& what) : Error(what) {}
};

/// Polynomial division by the zero polynomial.
struct DivisionByZeroPoly : Error {
    explicit DivisionByZeroPoly(const std::string& what) : Error(what) {}
};

/// An operation requiring a monic polynomial received a non-monic one.
struct NotMonic : Error {
    explicit NotMonic(const std::string& what) : Error(what) {}
};

/// An operation requiring positive degree received a constant polynomial.
struct ConstantPolynomial : Error {
    explicit ConstantPolynomial(const std::string& what) : Error(what) {}
};

/// An enumeration would exceed the configured residue budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// A distortion parameter lies outside (0, 1/2].
struct InvalidDelta : Error {
    explicit InvalidDelta(const std::string& what) : Error(what) {}
};

/// The geometric tail of a series fails the ratio test at the chosen
/// truncation point; the caller must raise the truncation.
struct TailNotContractive : Error {
    explicit TailNotContractive(const std::string& what) : Error(what) {}
};

/// An argument is outside the mathematical domain of the function.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (polynomials, instance files, CLI values).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fqcover

#endif  // FQCOVER_ERRORS_HPP
