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

#include "qsep/errors.hpp"
#include "qsep/partition.hpp"

// Runs a producer with the given epsilon, halving it after each
// CertificationError. Small enough epsilon always succeeds (A is empty).
template <typename F>
auto with_backoff(qsep::LemmaParams params, F&& produce) {
  double eps = params.effective_epsilon();
  for (int attempt = 0;; ++attempt) {
    params.epsilon = eps;
    try {
      return produce(params);
    } catch (const qsep::CertificationError&) {
      if (attempt > 60) throw;
      eps /= 2;
    }
  }
}
