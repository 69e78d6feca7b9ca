// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hfock {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: invalid parameters, schema violations, wrong shapes.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Numerical failures.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Field or function evaluated outside its domain of validity.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Recovered potentials depend on more than one coordinate per axis.
class SeparabilityError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace hfock
