/* Copyright 2026 The Multispace Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "multispace/channel.hpp"
#include "multispace/linearized_poly.hpp"

namespace msp::io {

using Json = nlohmann::ordered_json;

// "p^e" or "p^e/modulus", the modulus written as its base-p encoding with
// the leading coefficient included (x^2 + x + 1 over F_2 is 7).
Field parse_field_spec(const std::string& spec);
std::string field_spec(const Field& field);

Json subspace_to_json(const Subspace& s);
// Rejects bases that are not in RREF (kNotCanonical) unless canonicalize.
Subspace subspace_from_json(const Json& j, bool canonicalize = false);

Json multispace_to_json(const Multispace& w);
Multispace multispace_from_json(const Json& j, bool canonicalize = false);

Json code_to_json(const MultispaceCode& code);
MultispaceCode code_from_json(const Json& j, bool canonicalize = false);

Json linearized_to_json(const LinearizedPoly& poly);
LinearizedPoly linearized_from_json(const Json& j);

Json summary_to_json(const TrialSummary& summary);
Json summary_to_json(const EndToEndSummary& summary);

// One header line, then one row per record.
void write_trial_csv(std::ostream& os, const std::vector<TrialRecord>& records);

struct SearchRow {
  std::uint64_t q;
  std::size_t n;
  std::size_t m_max;
  std::size_t d_min;
  std::size_t greedy_size;
  std::optional<std::size_t> optimal_size;
  BigCount packing_bound;
  std::uint64_t seed;
};
void write_search_csv(std::ostream& os, const std::vector<SearchRow>& rows);

// Parses JSON text, converting parse failures to kParseError.
Json parse_json(const std::string& text);

}  // namespace msp::io
