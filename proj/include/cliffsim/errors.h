// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_ERRORS_H
#define CLIFFSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace cliffsim {

/// Malformed circuit or configuration text. Carries the 1-based line number (0 if not line specific).
class ParseError : public std::invalid_argument {
   public:
    ParseError(size_t line, const std::string &message)
        : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
    }
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// An internal invariant (probability tolerance, Hermiticity, commutation) was violated.
/// This always signals a bug rather than bad input.
class InternalInvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A Pauli group or sparse state would exceed the configured 2^cutoff_log2 size.
class CutoffExceeded : public std::runtime_error {
   public:
    CutoffExceeded(size_t rank, size_t cutoff_log2)
        : std::runtime_error(
              "group rank " + std::to_string(rank) + " exceeds cutoff_log2=" + std::to_string(cutoff_log2)),
          rank_(rank) {
    }
    size_t rank() const {
        return rank_;
    }

   private:
    size_t rank_;
};

}  // namespace cliffsim

#endif
