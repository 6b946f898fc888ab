// Copyright 2026 The uvlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace uvlab {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Register/qubit address does not fit the gate or measurement.
class AddressError : public Error {
   public:
    using Error::Error;
};

/// Two states (or a state and a circuit) disagree on register layout.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// A desk-scale size limit was exceeded.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Malformed SGC text. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &msg)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// Input that is well-formed but violates an operation's precondition.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

}  // namespace uvlab
