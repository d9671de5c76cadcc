// Copyright 2026 The ghzsdc Authors
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

#include "ghzsdc/serialize.h"

#include <cstdio>
#include <sstream>

#include "ghzsdc/errors.h"

namespace ghzsdc {

using nlohmann::json;

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Labels contain commas; quote per RFC 4180.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out.push_back('"');
    }
    out.push_back(ch);
  }
  return out + "\"";
}

}  // namespace

json to_json(const PureState& psi) {
  json amps = json::array();
  for (const auto& a : psi.amplitudes()) {
    amps.push_back({a.real(), a.imag()});
  }
  return {{"n_qubits", psi.n_qubits()}, {"amplitudes", amps}};
}

PureState pure_state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
    throw ValidationError("state JSON needs n_qubits and amplitudes");
  }
  std::vector<cplx> amps;
  for (const auto& a : j.at("amplitudes")) {
    if (!a.is_array() || a.size() != 2) {
      throw ValidationError("amplitudes must be [re, im] pairs");
    }
    amps.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  return PureState(j.at("n_qubits").get<unsigned>(), std::move(amps));
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

std::vector<int> bits_from_string(const std::string& s) {
  std::vector<int> bits;
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw ValidationError("message must contain only 0 and 1, got '" + s + "'");
    }
    bits.push_back(ch - '0');
  }
  return bits;
}

json to_json(const Transcript& t) {
  json config = {
      {"n_parties", t.config.n_parties},
      {"control_probability", t.config.control_probability},
      {"message", bits_to_string(t.config.message_bits)},
      {"seed", t.config.seed},
      {"attack", json::parse(attack_to_json(t.config.attack))},
      {"max_rounds", t.config.max_rounds},
  };
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json announcements = json::array();
    for (const auto& m : r.announcements) {
      announcements.push_back({{"sender", m.sender}, {"kind", to_string(m.kind)}, {"payload", m.payload}});
    }
    json jr = {
        {"index", r.index},
        {"mode", to_string(r.mode)},
        {"outcomes", r.outcomes},
        {"announcements", announcements},
    };
    if (r.basis) {
      jr["basis"] = to_string(*r.basis);
    }
    if (r.receiver_decodes) {
      jr["decodes"] = *r.receiver_decodes;
    }
    if (r.detection_flag) {
      jr["detected"] = *r.detection_flag;
    }
    rounds.push_back(std::move(jr));
  }
  json decoded = json::array();
  for (const auto& bits : t.decoded_message) {
    decoded.push_back(bits_to_string(bits));
  }
  return {
      {"config", config},
      {"rounds", rounds},
      {"decoded_message", decoded},
      {"aborted", t.aborted},
      {"abort_round", t.abort_round ? json(*t.abort_round) : json(nullptr)},
  };
}

json to_json(const SecurityReport& r) {
  return {
      {"gamma", r.gamma},
      {"entropy_bound_bits", r.entropy_bound_bits},
      {"detection_exact", r.detection_exact},
      {"detection_mc", r.detection_mc ? json(*r.detection_mc) : json(nullptr)},
      {"mc_std_error", r.mc_std_error ? json(*r.mc_std_error) : json(nullptr)},
      {"ghz_diagonal_weights", r.ghz_diagonal_weights},
      {"bound_satisfied", r.bound_satisfied},
  };
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.attack_label) << ',' << format_number(r.param) << ',' << format_number(r.gamma) << ','
        << format_number(r.d_exact) << ',' << (r.d_mc ? format_number(*r.d_mc) : "") << ','
        << (r.mc_std_err ? format_number(*r.mc_std_err) : "") << ',' << format_number(r.s_max_bits) << '\n';
  }
  return out.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({
        {"attack_label", r.attack_label},
        {"param", r.param},
        {"gamma", r.gamma},
        {"d_exact", r.d_exact},
        {"d_mc", r.d_mc ? json(*r.d_mc) : json(nullptr)},
        {"mc_std_err", r.mc_std_err ? json(*r.mc_std_err) : json(nullptr)},
        {"s_max_bits", r.s_max_bits},
        {"bound_satisfied", r.bound_satisfied},
    });
  }
  return out;
}

}  // namespace ghzsdc
