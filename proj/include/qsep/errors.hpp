// Copyright 2026 The qsep Authors
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

namespace qsep {

// Malformed input: bad characters, mismatched lengths, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked to run above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate was presented against a graph it was not produced for.
class ProvenanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructive producer could not build a certificate under the given
// parameters (precondition violated or an internal audit failed).
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, int part = -1)
      : std::runtime_error(what), part_(part) {}
  // Offending r-division part, or -1 when not applicable.
  int part() const { return part_; }

 private:
  int part_;
};

}  // namespace qsep
