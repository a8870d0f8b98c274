// Copyright 2026 The quditsort Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qds {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a precondition (bad dimension, bad power, bad path...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Two operands have incompatible dimensions.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// A matrix that must be unitary is not, within the requested tolerance.
class NotUnitaryError : public Error {
public:
    using Error::Error;
};

/// A state expected to be a computational basis state is not.
class NotBasisStateError : public Error {
public:
    using Error::Error;
};

/// A candidate mapping is structurally invalid (missing or non-normalized images).
class MalformedMappingError : public Error {
public:
    using Error::Error;
};

}  // namespace qds
