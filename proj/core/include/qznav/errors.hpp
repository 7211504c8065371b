// Copyright 2026 The QZNav Authors
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

#ifndef QZNAV_ERRORS_HPP
#define QZNAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qznav {

/// Base class for all qznav errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible dimensions.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A domain-type invariant failed at construction (non-Hermitian matrix,
/// non-unitary matrix, unnormalised state). The message carries the
/// measured violation.
class InvariantViolationError : public Error {
 public:
  InvariantViolationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A travel-time query points in a direction the wind makes unreachable.
class UnreachableDirectionError : public Error {
 public:
  using Error::Error;
};

/// The journey-time root search exhausted the horizon without a root.
/// Carries the smallest residual seen so the caller can judge whether
/// raising the horizon would help.
class HorizonExceededError : public Error {
 public:
  HorizonExceededError(const std::string& what, double min_residual,
                       double t_max)
      : Error(what), min_residual_(min_residual), t_max_(t_max) {}
  double min_residual() const { return min_residual_; }
  double t_max() const { return t_max_; }

 private:
  double min_residual_;
  double t_max_;
};

/// The explicit initial-control formula is singular (sin(T/2) vanishes
/// while the endpoints are distinct rays).
class SingularControlError : public Error {
 public:
  using Error::Error;
};

/// A competitor control schedule violates the admissible norm bound.
class InadmissibleScheduleError : public Error {
 public:
  using Error::Error;
};

/// A problem file failed to parse or validate.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qznav

#endif  // QZNAV_ERRORS_HPP
