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

#include "blindlab/report.hpp"

#include <sstream>

namespace blindlab {

void put_exact(Json& j, const std::string& key, const RealSqrt2& value) {
  j[key] = value.to_string();
  j[key + "_approx"] = value.to_double();
}

Json to_json(const BinaryDistribution& d) {
  Json j = Json::object();
  put_exact(j, "p0", d.p0());
  put_exact(j, "p1", d.p1());
  return j;
}

Json to_json(const MultiplicativeErrorReport& r) {
  Json j = Json::object();
  j["ideal"] = to_json(r.ideal);
  j["claimed"] = to_json(r.claimed);
  j["epsilon"] = to_string(r.epsilon);
  j["residuals"] = {r.residuals[0].to_string(), r.residuals[1].to_string()};
  j["residuals_approx"] = {r.residuals[0].to_double(), r.residuals[1].to_double()};
  j["bounds"] = {r.bounds[0].to_string(), r.bounds[1].to_string()};
  j["pass"] = r.pass;
  return j;
}

Json to_json(const ReductionReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  put_exact(j, "pV1", r.p_v);
  put_exact(j, "pW1", r.p_w);
  j["w_ok"] = r.w_ok;
  put_exact(j, "ptilde_expected", r.ptilde_expected);
  put_exact(j, "ptilde_actual", r.ptilde_actual);
  j["dqc1_ok"] = r.dqc1_ok;
  j["s"] = r.s;
  put_exact(j, "iqp_expected", r.iqp_expected);
  put_exact(j, "iqp_actual", r.iqp_actual);
  j["iqp_ok"] = r.iqp_ok;
  j["state_identity_ok"] = r.state_identity_ok;
  j["global_phase"] = r.global_phase ? Json(*r.global_phase) : Json(nullptr);
  return j;
}

Json to_json(const SchemeManifest& m) {
  return Json{{"name", m.name},
              {"coin_length", {{"per_bit", m.coins_per_bit}, {"offset", m.coin_offset}}},
              {"response_length", m.response_length},
              {"default_family", m.default_family},
              {"description", m.description}};
}

Json to_json(const CorrectnessReport& r) {
  Json j = Json::object();
  j["epsilon"] = to_string(r.epsilon);
  j["pass"] = r.pass();
  j["max_fail_probability"] = to_string(r.max_fail_probability);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je = to_json(e.check);
    je["x"] = e.x.to_string();
    je["key"] = e.key.to_string();
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  Json violations = Json::array();
  for (const auto& e : r.violations) violations.push_back({{"x", e.x.to_string()}, {"key", e.key.to_string()}});
  j["violations"] = std::move(violations);
  return j;
}

namespace {

Json strings(const std::vector<BitString>& v) {
  Json j = Json::array();
  for (const auto& b : v) j.push_back(b.to_string());
  return j;
}

}  // namespace

Json to_json(const BlindnessReport& r) {
  return Json{{"x1", r.x1.to_string()},
              {"x2", r.x2.to_string()},
              {"only_x1", strings(r.only_x1)},
              {"only_x2", strings(r.only_x2)},
              {"pass", r.pass()}};
}

Json to_json(const EncryptionSupport& s) {
  Json support = Json::object();
  for (const auto& [a, p] : s.support) support[a.to_string()] = p.to_string();
  return Json{{"x", s.x.to_string()}, {"support", support}, {"fail_probability", to_string(s.fail_probability)}};
}

Json to_json(const Advice& a) {
  Json response = Json::object();
  for (const auto& [b, p] : a.response) response[b.to_string()] = p.to_string();
  return Json{{"s", a.s},
              {"mode", to_string(a.mode)},
              {"coins", a.coins.to_string()},
              {"key", a.key.to_string()},
              {"a", a.a.to_string()},
              {"attempts", a.attempts},
              {"response", response}};
}

Json to_json(const ExtractionOutcome& o) {
  Json j = Json::object();
  put_exact(j, "eta", o.eta);
  put_exact(j, "pr_xi_1", o.pr_xi_1);
  put_exact(j, "p_acc", o.p_acc);
  j["decision"] = o.accept ? "accept" : "reject";
  j["matching_coins"] = o.matching_coins;
  j["successful_coins"] = o.successful_coins;
  return j;
}

Json to_json(const ExtractionBounds& b) {
  Json j = Json::object();
  put_exact(j, "lower", b.lower);
  put_exact(j, "upper", b.upper);
  j["ok"] = b.ok;
  return j;
}

std::string to_string(TruthValue v) {
  switch (v) {
    case TruthValue::zero: return "0";
    case TruthValue::one: return "1";
    case TruthValue::undefined: return "undefined";
  }
  return "?";
}

Json to_json(const AllDemoOutcome& o) {
  Json j = Json::object();
  j["x"] = o.x.to_string();
  j["f_x"] = to_string(o.fx);
  put_exact(j, "p_acc", o.p_acc);
  j["decision"] = o.accept ? "accept" : "reject";
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dump_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "subject,check,pass,value\n";
  for (const auto& r : rows) {
    os << csv_field(r.subject) << ',' << csv_field(r.check) << ',' << (r.pass ? "true" : "false") << ','
       << csv_field(r.value) << '\n';
  }
  return os.str();
}

}  // namespace blindlab
