// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rankecp {

/// Invalid or inconsistent parameters (lengths, degrees, strides, index sets).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside what the toolkit supports (e.g. q > 16).
class UnsupportedParameter : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// The supplied modulus polynomial factors over the base field.
class ReducibleModulus : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Malformed or schema-violating serialized input.
class FormatError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration would exceed the configured codeword budget.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A linear system promised by a precondition turned out inconsistent.
class InconsistentInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankecp
