// Copyright 2026 The commconj Authors
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

#ifndef COMMCONJ_ERROR_HPP
#define COMMCONJ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace commconj {

/// Malformed or out-of-contract input (wrong shape, non-unitary argument...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The mathematics says no: e.g. the unitary is not self-dual, so it has
/// no commuting conjugation at all.
class RefusalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical check exceeded its tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace commconj

#endif  // COMMCONJ_ERROR_HPP
