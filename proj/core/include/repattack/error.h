// Copyright 2026 The repattack Authors
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

#ifndef REPATTACK_ERROR_H_
#define REPATTACK_ERROR_H_

#include <stdexcept>
#include <string>

namespace repattack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition (e.g. applying an overlapping
// change to a variant).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A remote endpoint could not be reached or answered with a non-2xx status.
class TransportError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public TransportError {
 public:
  using TransportError::TransportError;
};

// A remote endpoint answered, but the payload violates its JSON contract.
class MalformedResponse : public Error {
 public:
  using Error::Error;
};

// The per-example query budget is spent. This is the normal way an
// unsuccessful attack ends, not a system failure.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted() : Error("query budget exhausted") {}
};

}  // namespace repattack

#endif  // REPATTACK_ERROR_H_
