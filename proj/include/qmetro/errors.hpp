// Copyright 2026 The qmetro Authors
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

#ifndef QMETRO_ERRORS_HPP
#define QMETRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmetro {

class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public InvalidInput {
 public:
  explicit DimensionMismatch(const std::string& what) : InvalidInput(what) {}
};

// rho_dot is not the derivative of a unit-trace family.
class InvalidFamily : public InvalidInput {
 public:
  explicit InvalidFamily(const std::string& what) : InvalidInput(what) {}
};

// i U^dag Udot is not Hermitian: U(theta) is not a unitary family.
class NotUnitaryFamily : public std::runtime_error {
 public:
  explicit NotUnitaryFamily(const std::string& what) : std::runtime_error(what) {}
};

class NotCommuting : public std::runtime_error {
 public:
  explicit NotCommuting(const std::string& what) : std::runtime_error(what) {}
};

class BracketFailure : public std::runtime_error {
 public:
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

class WrongFamilyKind : public InvalidInput {
 public:
  explicit WrongFamilyKind(const std::string& what) : InvalidInput(what) {}
};

}  // namespace qmetro

#endif  // QMETRO_ERRORS_HPP
