/*
 * Copyright 2026 The groupauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GROUPAUTH_ERRORS_H_
#define GROUPAUTH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupauth {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the operation's domain (zero modulus, plaintext out
// of range, mismatched vector lengths, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// c^s mod p is not a product of distinct system primes.
class MalformedCiphertext : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class InsufficientPrimes : public Error {
 public:
  using Error::Error;
};

class NonMonotone : public Error {
 public:
  using Error::Error;
};

class GroupLargerThanPrimeCount : public Error {
 public:
  using Error::Error;
};

// A serialized document is missing a field or has a field of the wrong shape.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& message)
      : Error("field '" + field + "': " + message), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace groupauth

#endif  // GROUPAUTH_ERRORS_H_
