/*
   Copyright 2026 The asgenus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ASGENUS_ERRORS_HPP
#define ASGENUS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asgenus {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two operands belong to different fields.
class FieldMismatchError : public Error {
   public:
    using Error::Error;
};

/// Division by zero (field element, polynomial, or rational function).
class DivisionByZeroError : public Error {
   public:
    using Error::Error;
};

/// A field description is invalid (p not prime, modulus reducible, ...).
class InvalidFieldError : public Error {
   public:
    using Error::Error;
};

/// A residue-field construction was attempted at a reducible or non-monic modulus.
class NotIrreducibleError : public Error {
   public:
    using Error::Error;
};

/// D lies in the image of x -> x^p - x, so K = k and there is nothing to compute.
class TrivialExtensionError : public Error {
   public:
    using Error::Error;
};

/// D defines a constant-field extension (m = 0 with a nonzero constant part).
class NonGeometricError : public Error {
   public:
    using Error::Error;
};

/// A symbol or oracle was requested at a place where D has a pole.
class RamifiedPlaceError : public Error {
   public:
    using Error::Error;
};

/// An enumeration would exceed the configured budget.
class BudgetError : public Error {
   public:
    using Error::Error;
};

/// splitting_oracle: the residue field is too large to search exhaustively.
class ResidueFieldTooLargeError : public BudgetError {
   public:
    using BudgetError::BudgetError;
};

/// zeta: a point count over F_{q^k} would exceed the enumeration budget.
class BudgetExceededError : public BudgetError {
   public:
    using BudgetError::BudgetError;
};

/// zeta: the requested quantity is only defined for ramified imaginary K.
class UnsupportedClassificationError : public Error {
   public:
    using Error::Error;
};

/// Expression or field-spec syntax error, with the byte offset of the problem.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position) : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// The expression used 'g' but the coefficient field is prime.
class GeneratorUnavailableError : public ParseError {
   public:
    using ParseError::ParseError;
};

/// Internal invariant violated; indicates a bug, not a bad input.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// The computed L-polynomial does not satisfy the functional equation.
class FunctionalEquationViolatedError : public InternalError {
   public:
    using InternalError::InternalError;
};

}  // namespace asgenus

#endif  // ASGENUS_ERRORS_HPP
