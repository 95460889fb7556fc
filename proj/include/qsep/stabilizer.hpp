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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsep/gf2.hpp"
#include "qsep/vertex_set.hpp"

namespace qsep {

// An n-qubit Pauli operator as a symplectic pair (X part, Z part). Phase is
// discarded.
struct PauliWord {
  VertexSet x;
  VertexSet z;

  int num_qubits() const { return x.universe(); }
  VertexSet support() const { return x | z; }
  int weight() const { return support().size(); }
  std::string to_string() const;
  // Symplectic row [x | z] of length 2n.
  BitRow symplectic_row() const;

  bool operator==(const PauliWord&) const = default;
};

// Parses a string over {I, X, Y, Z}. Throws InputError on anything else.
PauliWord parse_pauli(std::string_view text);

// Symplectic inner product test. Throws InputError on a length mismatch.
bool commutes(const PauliWord& a, const PauliWord& b);

struct StabilizerCode {
  std::string name;
  int n = 0;
  std::vector<PauliWord> generators;
  int rank = 0;
  int k = 0;
  // True when the generator list has GF(2) dependencies.
  bool dependent_generators = false;

  // Stable 64-bit digest of the generator list (in order).
  std::uint64_t generator_hash() const;
};

// Validates pairwise commutation and computes rank and k. Throws InputError
// for an empty list, mixed lengths, or an anticommuting pair.
StabilizerCode build_code(std::vector<PauliWord> generators,
                          std::string name = "");

struct BruteForceCaps {
  int distance_max_n = 12;
  int exhaustive_max_n = 10;
};

// Minimum weight of a Pauli commuting with every generator but outside their
// span. Throws InputError when k == 0 and CapExceeded above `max_n`.
int code_distance(const StabilizerCode& code, int max_n = 12);

// Erasure correctability of U: no Pauli supported on U commutes with all
// generators while lying outside the stabilizer group.
//
// Decided by comparing two ranks: the centralizer restricted to U has
// dimension 2|U| - rank(G|U), and the stabilizer elements supported on U have
// dimension rank(G) - rank(G|complement). U is correctable iff they agree.
bool is_code_correctable(const StabilizerCode& code, const VertexSet& region);

enum class CodeFamily { repetition, five_qubit, steane, rotated_surface, toric };

CodeFamily parse_code_family(std::string_view name);
std::string to_string(CodeFamily family);

// Standard generator sets. `size` is ignored for five_qubit and steane.
StabilizerCode builtin_family(CodeFamily family, int size = 0);

// Code file format: optional `# name` header, one Pauli string per line,
// blank lines and `#` comments ignored. Errors carry the line number.
StabilizerCode read_code(std::istream& in);
void write_code(std::ostream& out, const StabilizerCode& code);

}  // namespace qsep
