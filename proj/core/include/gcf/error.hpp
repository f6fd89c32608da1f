// Copyright 2026 The gcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCF_ERROR_HPP
#define GCF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gcf {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: fields, polynomials, matrices.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of a mathematical operation was violated
/// (non-prime characteristic, reducible modulus, mixed fields, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gcf

#endif  // GCF_ERROR_HPP
