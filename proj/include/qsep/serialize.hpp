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

#include <string>

#include "json.hpp"
#include "qsep/certificate.hpp"
#include "qsep/partition.hpp"
#include "qsep/separator.hpp"
#include "qsep/tradeoff.hpp"

namespace qsep {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Parses JSON text; syntax errors become InputError with a line number.
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

// Sorted index list <-> VertexSet. Lists must be strictly increasing and in
// range.
Json set_to_json(const VertexSet& s);
VertexSet set_from_json(const Json& j, int n, const std::string& where);

// Every document carries "format_version". Parsers ignore unknown keys such
// as the "config" echo the command line tool adds.
Json to_json(const CertNode& node);
Json to_json(const Certificate& cert, int n);
CertNode cert_node_from_json(const Json& j, int n, const std::string& path = "root");
// n is read from the document when present, otherwise taken from the argument.
Certificate certificate_from_json(const Json& j, int n = -1);
int certificate_universe(const Json& j);

Json to_json(const SeparatorPartition& p);
SeparatorPartition separator_partition_from_json(const Json& j);

Json to_json(const ProfileFit& fit);
ProfileFit profile_fit_from_json(const Json& j);

Json to_json(const RDivision& div);
RDivision rdivision_from_json(const Json& j);

Json to_json(const TradeoffPartition& p);
TradeoffPartition tradeoff_partition_from_json(const Json& j);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json to_json(const DistanceCheck& r);
DistanceCheck distance_check_from_json(const Json& j);

Json to_json(const ExplorerResult& r);
ExplorerResult explorer_result_from_json(const Json& j);

// Stable text form: two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace qsep
