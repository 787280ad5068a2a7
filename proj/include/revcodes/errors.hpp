/*
 * Copyright 2026 The revcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace revcodes {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed tokens, wrong lengths, out-of-range parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A generating-set variant was requested whose conditions on (n, m) or on
/// the seed word do not hold. The message names the failed clause.
class VariantPreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Operands live in different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class NoLogarithmError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

class UndefinedDistanceError : public Error {
 public:
  using Error::Error;
};

/// Raised when a structural invariant fails; always a bug.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownExampleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace revcodes
