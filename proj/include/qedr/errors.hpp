// Copyright 2026 The qedr Authors
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

namespace qedr {

/// Operand shapes do not conform (matrix product, lifting, state/observable mismatch).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates a declared invariant: non-Hermitian observable,
/// non-unitary interaction, unnormalized state, non-finite entries.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two observables have no joint probability distribution in the state.
class NotCommutingInState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A classical-only quantity was requested on a weak joint distribution.
class WjdNotClassical : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result contradicts a rigorous identity; indicates a numerical or logic bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed external input (JSON files, command-line observable specs).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qedr
