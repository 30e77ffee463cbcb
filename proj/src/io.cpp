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

#include "multispace/io.hpp"

#include <algorithm>
#include <ostream>
#include <regex>

namespace msp::io {

namespace {

// Counts, dimensions and field elements are all non-negative integers.
bool all_numbers_unsigned(const Json& j) {
  if (j.is_number()) return j.is_number_unsigned();
  if (j.is_array() || j.is_object())
    return std::all_of(j.begin(), j.end(), [](const Json& x) { return all_numbers_unsigned(x); });
  return true;
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::kParseError, std::string("missing key '") + key + "'");
  if (!all_numbers_unsigned(j.at(key)))
    throw Error(ErrorCode::kParseError,
                std::string("negative or fractional number under '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
  static const std::regex kGrammar(R"(^(\d+)\^(\d+)(?:/(\d+))?$)");
  std::smatch match;
  if (!std::regex_match(spec, match, kGrammar))
    throw Error(ErrorCode::kParseError, "field spec '" + spec + "' is not p^e or p^e/modulus");
  unsigned long long p = 0, e = 0;
  try {
    p = std::stoull(match[1]);
    e = std::stoull(match[2]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "field spec '" + spec + "' out of range");
  }
  if (p > kMaxFieldOrder || e > 16)
    throw Error(ErrorCode::kFieldTooLarge, "field spec '" + spec + "' exceeds 2^16");
  std::optional<PrimePoly> modulus;
  if (match[3].matched) {
    if (!is_prime(p))
      throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    unsigned long long code = 0;
    try {
      code = std::stoull(match[3]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "modulus in '" + spec + "' out of range");
    }
    modulus = decode_prime_poly(code, static_cast<std::uint32_t>(p));
  }
  return Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), modulus);
}

std::string field_spec(const Field& field) { return field.spec(); }

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["q-spec"] = s.field().spec();
  j["n"] = s.ambient_dim();
  j["basis"] = s.basis().to_rows();
  return j;
}

Subspace subspace_from_json(const Json& j, bool canonicalize) {
  const Field field = parse_field_spec(get_field<std::string>(j, "q-spec"));
  const auto n = get_field<std::size_t>(j, "n");
  const auto rows = get_field<std::vector<std::vector<Elem>>>(j, "basis");
  for (const auto& r : rows)
    for (Elem c : r)
      if (!field.contains(c))
        throw Error(ErrorCode::kParseError,
                    "entry " + std::to_string(c) + " outside " + field.spec());
  const FqMatrix m = FqMatrix::from_rows(field, n, rows);
  return canonicalize ? Subspace::row_space(m) : Subspace::from_rref(m);
}

Json multispace_to_json(const Multispace& w) {
  Json j = subspace_to_json(w.underlying());
  j["height"] = w.height();
  return j;
}

Multispace multispace_from_json(const Json& j, bool canonicalize) {
  return Multispace(subspace_from_json(j, canonicalize), get_field<std::size_t>(j, "height"));
}

Json code_to_json(const MultispaceCode& code) {
  Json j;
  j["q-spec"] = code.field().spec();
  j["n"] = code.ambient_dim();
  j["m_max"] = code.max_rank();
  j["d_min"] = code.design_distance();
  Json words = Json::array();
  for (const auto& w : code.codewords()) words.push_back(multispace_to_json(w));
  j["codewords"] = std::move(words);
  return j;
}

MultispaceCode code_from_json(const Json& j, bool canonicalize) {
  const Field field = parse_field_spec(get_field<std::string>(j, "q-spec"));
  const auto n = get_field<std::size_t>(j, "n");
  const auto m_max = get_field<std::size_t>(j, "m_max");
  const auto d_min = get_field<std::size_t>(j, "d_min");
  if (!j.contains("codewords") || !j.at("codewords").is_array())
    throw Error(ErrorCode::kParseError, "missing codewords array");
  std::vector<Multispace> words;
  for (const auto& w : j.at("codewords")) {
    Multispace ms = multispace_from_json(w, canonicalize);
    require_same_field(field, ms.field());
    words.push_back(std::move(ms));
  }
  return MultispaceCode(field, n, m_max, std::move(words), d_min);
}

Json linearized_to_json(const LinearizedPoly& poly) {
  Json j;
  j["base-q"] = poly.base_order();
  j["q-spec"] = poly.field().spec();
  Json coeffs = Json::object();
  for (auto [i, a] : poly.coeffs()) coeffs[std::to_string(i)] = a;
  j["coeffs"] = std::move(coeffs);
  return j;
}

LinearizedPoly linearized_from_json(const Json& j) {
  const auto base = get_field<std::uint32_t>(j, "base-q");
  const Field big = parse_field_spec(get_field<std::string>(j, "q-spec"));
  if (!j.contains("coeffs") || !j.at("coeffs").is_object())
    throw Error(ErrorCode::kParseError, "missing coeffs object");
  std::map<std::uint64_t, Elem> coeffs;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::uint64_t i = 0;
    try {
      std::size_t used = 0;
      i = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "coefficient index '" + key + "' is not an integer");
    }
    if (!value.is_number_unsigned() || !big.contains(value.get<Elem>()))
      throw Error(ErrorCode::kParseError, "coefficient " + key + " outside " + big.spec());
    coeffs[i] = value.get<Elem>();
  }
  return LinearizedPoly(big, base, std::move(coeffs));
}

namespace {

Json histogram_json(const std::map<std::size_t, std::size_t>& histogram) {
  Json h = Json::object();
  for (auto [d, c] : histogram) h[std::to_string(d)] = c;
  return h;
}

}  // namespace

Json summary_to_json(const TrialSummary& summary) {
  Json j;
  j["trials"] = summary.trials;
  j["violations"] = summary.violations;
  j["max_distance"] = summary.max_distance;
  j["histogram"] = histogram_json(summary.histogram);
  return j;
}

Json summary_to_json(const EndToEndSummary& summary) {
  Json j;
  j["trials"] = summary.trials;
  j["violations"] = summary.violations;
  j["max_distance"] = summary.max_distance;
  j["histogram"] = histogram_json(summary.histogram);
  j["block_errors"] = summary.block_errors;
  j["block_error_rate"] = summary.block_error_rate();
  j["guaranteed_trials"] = summary.guaranteed_trials;
  j["guaranteed_errors"] = summary.guaranteed_errors;
  return j;
}

void write_trial_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << "trial,sent_rank,sent_dim,received_rank,received_dim,transform_rank,"
        "observed_distance,bound,bound_satisfied\n";
  for (const auto& r : records) {
    os << r.trial << ',' << r.sent.rank() << ',' << r.sent.dim() << ',' << r.received.rank()
       << ',' << r.received.dim() << ',' << r.transform_rank << ',' << r.observed_distance
       << ',';
    if (r.bound) os << *r.bound;
    os << ',' << (r.bound_satisfied ? 1 : 0) << '\n';
  }
}

void write_search_csv(std::ostream& os, const std::vector<SearchRow>& rows) {
  os << "q,n,m_max,d_min,greedy_size,optimal_size,packing_bound,seed\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.n << ',' << r.m_max << ',' << r.d_min << ',' << r.greedy_size << ',';
    if (r.optimal_size) os << *r.optimal_size;
    os << ',' << r.packing_bound << ',' << r.seed << '\n';
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace msp::io
