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

#include "qsep/stabilizer.hpp"

#include <array>
#include <istream>
#include <ostream>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Restriction of the generator rows to the columns of `region`, as rows of
// length 2|region| (X columns then Z columns).
std::vector<BitRow> restrict_rows(const StabilizerCode& code,
                                  const std::vector<int>& region) {
  const int w = static_cast<int>(region.size());
  std::vector<BitRow> rows;
  rows.reserve(code.generators.size());
  for (const auto& g : code.generators) {
    BitRow row(2 * w);
    for (int i = 0; i < w; ++i) {
      if (g.x.contains(region[i])) row.set(i);
      if (g.z.contains(region[i])) row.set(w + i);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string PauliWord::to_string() const {
  std::string s(num_qubits(), 'I');
  for (int i = 0; i < num_qubits(); ++i) {
    bool xi = x.contains(i), zi = z.contains(i);
    s[i] = xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : 'I');
  }
  return s;
}

BitRow PauliWord::symplectic_row() const {
  const int n = num_qubits();
  BitRow row(2 * n);
  x.for_each([&](int i) { row.set(i); });
  z.for_each([&](int i) { row.set(n + i); });
  return row;
}

PauliWord parse_pauli(std::string_view text) {
  if (text.empty()) throw InputError("empty Pauli string");
  const int n = static_cast<int>(text.size());
  PauliWord p{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) {
    switch (text[i]) {
      case 'I': break;
      case 'X': p.x.insert(i); break;
      case 'Z': p.z.insert(i); break;
      case 'Y':
        p.x.insert(i);
        p.z.insert(i);
        break;
      default:
        throw InputError("invalid Pauli character '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i));
    }
  }
  return p;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InputError("Pauli length mismatch: " + std::to_string(a.num_qubits()) +
                     " vs " + std::to_string(b.num_qubits()));
  }
  int parity = ((a.x & b.z).size() + (a.z & b.x).size()) & 1;
  return parity == 0;
}

std::uint64_t StabilizerCode::generator_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& g : generators) {
    h = fnv1a(h, g.to_string());
    h = fnv1a(h, "\n");
  }
  return h;
}

StabilizerCode build_code(std::vector<PauliWord> generators, std::string name) {
  if (generators.empty()) throw InputError("code needs at least one generator");
  const int n = generators.front().num_qubits();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].num_qubits() != n) {
      throw InputError("generator " + std::to_string(i) + " has length " +
                       std::to_string(generators[i].num_qubits()) + ", expected " +
                       std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw InputError("generators " + std::to_string(i) + " and " +
                         std::to_string(j) + " anticommute");
      }
    }
  }
  StabilizerCode code;
  code.name = std::move(name);
  code.n = n;
  std::vector<BitRow> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(g.symplectic_row());
  code.rank = gf2_rank(rows);
  code.k = n - code.rank;
  code.dependent_generators = code.rank < static_cast<int>(generators.size());
  code.generators = std::move(generators);
  return code;
}

int code_distance(const StabilizerCode& code, int max_n) {
  if (code.k < 1) throw InputError("distance undefined for k = 0");
  if (code.n > max_n) {
    throw CapExceeded("code_distance: n = " + std::to_string(code.n) +
                      " exceeds cap " + std::to_string(max_n));
  }
  const int n = code.n;
  const int m = static_cast<int>(code.generators.size());
  RowBasis stabilizer(2 * n);
  for (const auto& g : code.generators) stabilizer.add(g.symplectic_row());

  // syndrome[q][p]: which generators anticommute with the single-qubit Pauli
  // p in {X, Z, Y} on qubit q.
  std::vector<std::array<BitRow, 3>> syndrome(n);
  for (int q = 0; q < n; ++q) {
    for (auto& s : syndrome[q]) s = BitRow(m);
    for (int g = 0; g < m; ++g) {
      bool gx = code.generators[g].x.contains(q);
      bool gz = code.generators[g].z.contains(q);
      syndrome[q][0].set(g, gz);       // X anticommutes with Z, Y
      syndrome[q][1].set(g, gx);       // Z anticommutes with X, Y
      syndrome[q][2].set(g, gx != gz);  // Y anticommutes with X, Z
    }
  }

  std::vector<int> pos;
  std::vector<int> letter;
  for (int w = 1; w <= n; ++w) {
    pos.resize(w);
    letter.assign(w, 0);
    for (int i = 0; i < w; ++i) pos[i] = i;
    while (true) {
      std::fill(letter.begin(), letter.end(), 0);
      while (true) {
        BitRow s(m);
        for (int i = 0; i < w; ++i) s ^= syndrome[pos[i]][letter[i]];
        if (s.is_zero()) {
          BitRow row(2 * n);
          for (int i = 0; i < w; ++i) {
            if (letter[i] != 1) row.set(pos[i]);
            if (letter[i] != 0) row.set(n + pos[i]);
          }
          if (!stabilizer.contains(row)) return w;
        }
        int i = w - 1;
        while (i >= 0 && letter[i] == 2) letter[i--] = 0;
        if (i < 0) break;
        ++letter[i];
      }
      int i = w - 1;
      while (i >= 0 && pos[i] == n - w + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  // Unreachable for k >= 1: the centralizer strictly contains the stabilizer.
  throw std::logic_error("code_distance: no logical operator found");
}

bool is_code_correctable(const StabilizerCode& code, const VertexSet& region) {
  if (region.universe() != code.n) {
    throw InputError("region universe " + std::to_string(region.universe()) +
                     " does not match n = " + std::to_string(code.n));
  }
  const auto inside = region.to_vector();
  const auto outside = region.complement().to_vector();
  const int centralizer_dim =
      2 * static_cast<int>(inside.size()) - gf2_rank(restrict_rows(code, inside));
  const int stabilizer_dim = code.rank - gf2_rank(restrict_rows(code, outside));
  return centralizer_dim == stabilizer_dim;
}

CodeFamily parse_code_family(std::string_view name) {
  if (name == "repetition") return CodeFamily::repetition;
  if (name == "five_qubit") return CodeFamily::five_qubit;
  if (name == "steane") return CodeFamily::steane;
  if (name == "rotated_surface") return CodeFamily::rotated_surface;
  if (name == "toric") return CodeFamily::toric;
  throw InputError("unknown code family '" + std::string(name) + "'");
}

std::string to_string(CodeFamily family) {
  switch (family) {
    case CodeFamily::repetition: return "repetition";
    case CodeFamily::five_qubit: return "five_qubit";
    case CodeFamily::steane: return "steane";
    case CodeFamily::rotated_surface: return "rotated_surface";
    case CodeFamily::toric: return "toric";
  }
  return "?";
}

namespace {

PauliWord pauli_on(int n, char letter, const std::vector<int>& qubits) {
  std::string s(n, 'I');
  for (int q : qubits) s[q] = letter;
  return parse_pauli(s);
}

StabilizerCode repetition_code(int length) {
  if (length < 2) throw InputError("repetition code needs L >= 2");
  std::vector<PauliWord> gens;
  for (int i = 0; i + 1 < length; ++i) gens.push_back(pauli_on(length, 'Z', {i, i + 1}));
  return build_code(std::move(gens), "repetition(" + std::to_string(length) + ")");
}

StabilizerCode five_qubit_code() {
  std::vector<PauliWord> gens;
  const std::string base = "XZZXI";
  for (int s = 0; s < 4; ++s) {
    std::string word(5, 'I');
    for (int i = 0; i < 5; ++i) word[(i + s) % 5] = base[i];
    gens.push_back(parse_pauli(word));
  }
  return build_code(std::move(gens), "five_qubit");
}

StabilizerCode steane_code() {
  const std::vector<std::vector<int>> checks = {
      {3, 4, 5, 6}, {1, 2, 5, 6}, {0, 2, 4, 6}};
  std::vector<PauliWord> gens;
  for (const auto& c : checks) gens.push_back(pauli_on(7, 'X', c));
  for (const auto& c : checks) gens.push_back(pauli_on(7, 'Z', c));
  return build_code(std::move(gens), "steane");
}

// Qubits on an L x L grid, index row * L + col. Plaquette (a, b) with
// 0 <= a, b <= L touches the qubits at rows {a-1, a}, cols {b-1, b}. Bulk
// plaquettes alternate X/Z by parity; weight-2 X checks sit on the top and
// bottom edges, weight-2 Z checks on the left and right edges.
StabilizerCode rotated_surface_code(int size) {
  if (size < 3 || size % 2 == 0) {
    throw InputError("rotated_surface needs odd L >= 3");
  }
  const int n = size * size;
  std::vector<PauliWord> gens;
  for (int a = 0; a <= size; ++a) {
    for (int b = 0; b <= size; ++b) {
      std::vector<int> qubits;
      for (int r : {a - 1, a}) {
        for (int c : {b - 1, b}) {
          if (r >= 0 && r < size && c >= 0 && c < size) qubits.push_back(r * size + c);
        }
      }
      const bool x_type = (a + b) % 2 == 0;
      const bool top_bottom = a == 0 || a == size;
      const bool left_right = b == 0 || b == size;
      if (qubits.size() == 4) {
        gens.push_back(pauli_on(n, x_type ? 'X' : 'Z', qubits));
      } else if (qubits.size() == 2) {
        if (top_bottom && x_type) gens.push_back(pauli_on(n, 'X', qubits));
        if (left_right && !x_type) gens.push_back(pauli_on(n, 'Z', qubits));
      }
    }
  }
  return build_code(std::move(gens), "rotated_surface(" + std::to_string(size) + ")");
}

// Qubits on the edges of an L x L periodic lattice: horizontal edge (i, j) is
// i * L + j, vertical edge (i, j) is L^2 + i * L + j.
StabilizerCode toric_code(int size) {
  if (size < 2) throw InputError("toric code needs L >= 2");
  const int l2 = size * size;
  const int n = 2 * l2;
  auto h = [&](int i, int j) { return ((i + size) % size) * size + (j + size) % size; };
  auto v = [&](int i, int j) { return l2 + h(i, j); };
  std::vector<PauliWord> gens;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      gens.push_back(pauli_on(n, 'X', {h(i, j), h(i, j - 1), v(i, j), v(i - 1, j)}));
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      gens.push_back(pauli_on(n, 'Z', {h(i, j), h(i + 1, j), v(i, j), v(i, j + 1)}));
    }
  }
  return build_code(std::move(gens), "toric(" + std::to_string(size) + ")");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

StabilizerCode builtin_family(CodeFamily family, int size) {
  switch (family) {
    case CodeFamily::repetition: return repetition_code(size);
    case CodeFamily::five_qubit: return five_qubit_code();
    case CodeFamily::steane: return steane_code();
    case CodeFamily::rotated_surface: return rotated_surface_code(size);
    case CodeFamily::toric: return toric_code(size);
  }
  throw InputError("unknown code family");
}

StabilizerCode read_code(std::istream& in) {
  std::string line;
  std::string name;
  std::vector<PauliWord> gens;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (!seen_content && name.empty()) name = trim(std::string_view(t).substr(1));
      seen_content = true;
      continue;
    }
    seen_content = true;
    try {
      gens.push_back(parse_pauli(t));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (gens.back().num_qubits() != gens.front().num_qubits()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": generator length differs from first generator");
    }
  }
  if (gens.empty()) throw InputError("code file contains no generators");
  return build_code(std::move(gens), name);
}

void write_code(std::ostream& out, const StabilizerCode& code) {
  if (!code.name.empty()) out << "# " << code.name << '\n';
  for (const auto& g : code.generators) out << g.to_string() << '\n';
}

}  // namespace qsep
