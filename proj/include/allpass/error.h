// Copyright 2026 The allpass Authors
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

#ifndef ALLPASS_ERROR_H
#define ALLPASS_ERROR_H

#include <stdexcept>
#include <string>

namespace allpass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the model is defined.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// The configuration makes a closed-form expression singular.
class SingularError : public Error {
   public:
    using Error::Error;
};

/// The Fock-space truncation would exceed the configured dimension cap.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// An iterative procedure (truncation growth, simplex search) gave up.
class ConvergenceError : public Error {
   public:
    using Error::Error;
};

/// Eigenstates could not be matched to bare states with enough margin.
class LabelingError : public Error {
   public:
    using Error::Error;
};

/// A root-bracketing search found no sign change.
class NoRootError : public Error {
   public:
    using Error::Error;
};

/// Malformed config or input file.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace allpass

#endif
