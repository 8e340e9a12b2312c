/*
 * Copyright 2026 The vsagg Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vsagg/simnet/config.h"

#include <string>

#include "vsagg/common/error.h"

namespace vsagg::simnet {
namespace {

struct PhaseName {
  Phase phase;
  std::string_view name;
};

constexpr PhaseName kPhaseNames[] = {
    {Phase::kSetup, "setup"},
    {Phase::kMasking, "masking"},
    {Phase::kAggregation, "aggregation"},
    {Phase::kVerification, "verification"},
    {Phase::kDecryption, "decryption"},
};

struct ActionName {
  FaultAction action;
  std::string_view name;
};

constexpr ActionName kActionNames[] = {
    {FaultAction::kDropOutbound, "drop_outbound"},
    {FaultAction::kDisconnect, "disconnect"},
    {FaultAction::kReconnect, "reconnect"},
    {FaultAction::kLoseShares, "lose_shares"},
};

[[noreturn]] void config_error(const std::string& msg) {
  throw Error(ErrorCode::kConfigError, msg);
}

template <typename T>
T get_or(const nlohmann::json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string_view phase_name(Phase phase) {
  for (const auto& p : kPhaseNames) {
    if (p.phase == phase) return p.name;
  }
  return "unknown";
}

Phase parse_phase(std::string_view name) {
  for (const auto& p : kPhaseNames) {
    if (p.name == name) return p.phase;
  }
  config_error("unknown phase '" + std::string(name) + "'");
}

std::string_view fault_action_name(FaultAction action) {
  for (const auto& a : kActionNames) {
    if (a.action == action) return a.name;
  }
  return "unknown";
}

FaultAction parse_fault_action(std::string_view name) {
  for (const auto& a : kActionNames) {
    if (a.name == name) return a.action;
  }
  config_error("unknown fault action '" + std::string(name) + "'");
}

void SimConfig::validate() const {
  if (participants < 1) config_error("participants must be at least 1");
  if (delay.min > delay.max) config_error("delay.min exceeds delay.max");
  if (phase_budget == 0) config_error("phase_budget must be positive");
  for (const auto& f : faults) {
    if (f.participant < 1 || f.participant > participants) {
      config_error("fault references unknown participant " + std::to_string(f.participant));
    }
    if (f.action == FaultAction::kLoseShares && f.phase != Phase::kSetup) {
      config_error("lose_shares only applies to the setup phase");
    }
  }
}

SimConfig SimConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) config_error("config must be a JSON object");
  SimConfig c;
  c.seed = get_or<std::uint64_t>(doc, "seed", c.seed);
  c.participants = get_or<std::uint32_t>(doc, "participants", c.participants);
  c.round = get_or<std::uint64_t>(doc, "round", c.round);
  c.phase_budget = get_or<std::uint64_t>(doc, "phase_budget", c.phase_budget);
  if (doc.contains("delay")) {
    const auto& d = doc.at("delay");
    c.delay.min = get_or<std::uint64_t>(d, "min", c.delay.min);
    c.delay.max = get_or<std::uint64_t>(d, "max", c.delay.max);
  }
  if (doc.contains("faults")) {
    if (!doc.at("faults").is_array()) config_error("faults must be an array");
    for (const auto& f : doc.at("faults")) {
      FaultEvent e;
      e.participant = get_or<std::uint32_t>(f, "participant", 0);
      e.phase = parse_phase(get_or<std::string>(f, "phase", ""));
      e.action = parse_fault_action(get_or<std::string>(f, "action", ""));
      c.faults.push_back(e);
    }
  }
  c.validate();
  return c;
}

nlohmann::json SimConfig::to_json() const {
  nlohmann::json faults_json = nlohmann::json::array();
  for (const auto& f : faults) {
    faults_json.push_back({{"participant", f.participant},
                           {"phase", std::string(phase_name(f.phase))},
                           {"action", std::string(fault_action_name(f.action))}});
  }
  return {{"seed", seed},
          {"participants", participants},
          {"round", round},
          {"delay", {{"min", delay.min}, {"max", delay.max}}},
          {"phase_budget", phase_budget},
          {"faults", faults_json}};
}

}  // namespace vsagg::simnet
