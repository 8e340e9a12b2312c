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

#include "vsagg/simnet/network.h"

#include <algorithm>
#include <utility>

#include "vsagg/common/error.h"
#include "vsagg/simnet/codec.h"

namespace vsagg::simnet {
namespace {

constexpr std::uint64_t kDelayStream = 0xde1a7;

std::string digest_of(std::span<const std::uint8_t> payload) {
  const auto h = sha256(payload);
  return to_hex(std::span(h).first(8));
}

}  // namespace

Bytes secure_recv(const ChannelKey& key, const Envelope& env) {
  if (!env.sealed) throw Error(ErrorCode::kAuthFailure, "envelope is not sealed");
  return open(key, env.header, env.payload);
}

Network::Network(const SimConfig& config, Transcript& transcript)
    : config_(config), transcript_(transcript), delay_rng_(config.seed, kDelayStream) {
  config_.validate();
}

void Network::begin_phase(Phase phase) {
  phase_ = phase;
  deadline_ = now_ + config_.phase_budget;
}

bool Network::online(ParticipantId id) const {
  if (id == kAggregatorId) return true;
  bool up = true;
  for (Phase ph : kAllPhases) {
    if (ph > phase_) break;
    bool disconnect = false;
    bool reconnect = false;
    for (const auto& f : config_.faults) {
      if (f.participant != id || f.phase != ph) continue;
      disconnect |= f.action == FaultAction::kDisconnect;
      reconnect |= f.action == FaultAction::kReconnect;
    }
    // A disconnect scheduled for the current phase wins over a reconnect.
    if (disconnect && (ph == phase_ || !reconnect)) up = false;
    else if (reconnect) up = true;
  }
  return up;
}

bool Network::drops_outbound(ParticipantId id) const {
  for (const auto& f : config_.faults) {
    if (f.participant == id && f.phase == phase_ && f.action == FaultAction::kDropOutbound) {
      return true;
    }
  }
  return false;
}

bool Network::loses_shares(ParticipantId id) const {
  for (const auto& f : config_.faults) {
    if (f.participant == id && f.phase == phase_ && f.action == FaultAction::kLoseShares) {
      return true;
    }
  }
  return false;
}

bool Network::send(ParticipantId src, ParticipantId dst, std::string kind, Bytes payload) {
  Envelope env;
  env.header = {src, dst, config_.round, next_seq_, std::move(kind)};
  env.payload = std::move(payload);
  return enqueue(std::move(env));
}

bool Network::secure_send(const ChannelKey& key, ParticipantId src, ParticipantId dst,
                          std::string kind, std::span<const std::uint8_t> payload) {
  Envelope env;
  env.header = {src, dst, config_.round, next_seq_, std::move(kind)};
  env.sealed = true;
  env.payload = seal(key, env.header, payload);
  return enqueue(std::move(env));
}

bool Network::enqueue(Envelope env) {
  if (!online(env.src())) return false;
  ++next_seq_;
  env.send_time = now_;
  const std::uint64_t span = config_.delay.max - config_.delay.min + 1;
  env.deliver_time = now_ + config_.delay.min + delay_rng_.uniform_u64(span);
  record("send", env);
  if (drops_outbound(env.src())) {
    record("drop", env, "outbound");
    return true;
  }
  queue_.push(std::move(env));
  return true;
}

void Network::run(const std::function<void(const Envelope&)>& deliver) {
  while (!queue_.empty()) {
    Envelope env = queue_.top();
    queue_.pop();
    if (env.deliver_time > deadline_) {
      budget_exhausted_ = true;
      record("late", env);
      continue;
    }
    now_ = std::max(now_, env.deliver_time);
    if (!online(env.dst())) {
      record("drop", env, "offline");
      continue;
    }
    record("deliver", env);
    deliver(env);
  }
}

void Network::note(std::string event, ParticipantId src, ParticipantId dst, std::string kind,
                   std::string detail) {
  transcript_.append({now_, std::move(event), src, dst, std::move(kind), {}, std::move(detail)});
}

void Network::record(std::string_view event, const Envelope& env, std::string detail) {
  transcript_.append({event == "send" ? env.send_time : now_, std::string(event), env.src(),
                      env.dst(), env.kind(), digest_of(env.payload), std::move(detail)});
}

}  // namespace vsagg::simnet
