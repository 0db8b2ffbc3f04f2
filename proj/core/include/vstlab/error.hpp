/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
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

namespace vstlab {

/// Base class of every exception thrown by vstlab.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: polynomial, scalar, word or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition or parameter constraint does not hold.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Operands do not fit together (matrix sizes, strand counts, alphabets).
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace vstlab
