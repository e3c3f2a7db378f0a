// Copyright 2026 The hbqc Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbqc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A caller broke a precondition (bad qubit index, width mismatch, ...).
class ContractViolation : public Error {
   public:
    using Error::Error;
};

class InvalidParameter : public Error {
   public:
    using Error::Error;
};

class InvalidState : public Error {
   public:
    using Error::Error;
};

/// The request is well formed but exceeds an enumeration or memory bound.
class ResourceBound : public Error {
   public:
    using Error::Error;
};

class InvalidCircuit : public Error {
   public:
    using Error::Error;
};

class UnsupportedGate : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace hbqc
