// Copyright 2026 The blindlab Authors
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

// JSON and CSV rendering of every result type. Exact values are strings in
// the "(u, v, e)" form with a sibling "<key>_approx" double; keys are sorted.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "blindlab/extract.hpp"
#include "blindlab/protocol.hpp"
#include "blindlab/reductions.hpp"

namespace blindlab {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "blindlab";
inline constexpr const char* kToolVersion = "0.1.0";

void put_exact(Json& j, const std::string& key, const RealSqrt2& value);

Json to_json(const BinaryDistribution& d);
Json to_json(const MultiplicativeErrorReport& r);
Json to_json(const ReductionReport& r);
Json to_json(const SchemeManifest& m);
Json to_json(const CorrectnessReport& r);
Json to_json(const BlindnessReport& r);
Json to_json(const EncryptionSupport& s);
Json to_json(const Advice& a);
Json to_json(const ExtractionOutcome& o);
Json to_json(const ExtractionBounds& b);
Json to_json(const AllDemoOutcome& o);

std::string to_string(TruthValue v);

/// Pretty-printed, sorted, newline-terminated.
std::string dump_json(const Json& j);

/// One row per (subject, check): subject,check,pass,value.
struct CsvRow {
  std::string subject, check;
  bool pass = false;
  std::string value;
};

std::string dump_csv(const std::vector<CsvRow>& rows);

}  // namespace blindlab
