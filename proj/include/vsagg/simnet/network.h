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

#ifndef VSAGG_SIMNET_NETWORK_H_
#define VSAGG_SIMNET_NETWORK_H_

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "vsagg/common/random.h"
#include "vsagg/common/types.h"
#include "vsagg/simnet/channel.h"
#include "vsagg/simnet/config.h"
#include "vsagg/simnet/transcript.h"

namespace vsagg::simnet {

struct Envelope {
  EnvelopeHeader header;
  std::uint64_t send_time = 0;
  std::uint64_t deliver_time = 0;
  bool sealed = false;
  // Ciphertext || tag when sealed, plaintext otherwise.
  Bytes payload;

  ParticipantId src() const { return header.src; }
  ParticipantId dst() const { return header.dst; }
  const std::string& kind() const { return header.kind; }
};

// Opens a sealed envelope; AuthFailure on any header or payload change.
Bytes secure_recv(const ChannelKey& key, const Envelope& env);

// Virtual-time message network. Participants are online or offline per phase
// according to the fault schedule; the aggregator (id 0) is always online.
class Network {
 public:
  Network(const SimConfig& config, Transcript& transcript);

  void begin_phase(Phase phase);
  Phase phase() const { return phase_; }
  std::uint64_t now() const { return now_; }
  std::uint64_t deadline() const { return deadline_; }
  std::uint64_t round() const { return config_.round; }
  const SimConfig& config() const { return config_; }

  bool online(ParticipantId id) const;
  bool drops_outbound(ParticipantId id) const;
  bool loses_shares(ParticipantId id) const;

  // False when the sender is offline; nothing is emitted in that case.
  bool send(ParticipantId src, ParticipantId dst, std::string kind, Bytes payload);
  bool secure_send(const ChannelKey& key, ParticipantId src, ParticipantId dst, std::string kind,
                   std::span<const std::uint8_t> payload);

  // Delivers queued envelopes in (deliver time, sequence) order until none
  // remain. Envelopes sent from inside the handler are delivered in the same
  // call. Deliveries past the phase deadline are discarded as late.
  void run(const std::function<void(const Envelope&)>& deliver);

  void note(std::string event, ParticipantId src, ParticipantId dst, std::string kind,
            std::string detail = {});

  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  struct Later {
    bool operator()(const Envelope& a, const Envelope& b) const {
      if (a.deliver_time != b.deliver_time) return a.deliver_time > b.deliver_time;
      return a.header.seq > b.header.seq;
    }
  };

  bool enqueue(Envelope env);
  void record(std::string_view event, const Envelope& env, std::string detail = {});

  SimConfig config_;
  Transcript& transcript_;
  Rng delay_rng_;
  Phase phase_ = Phase::kSetup;
  std::uint64_t now_ = 0;
  std::uint64_t deadline_ = 0;
  std::uint64_t next_seq_ = 0;
  bool budget_exhausted_ = false;
  std::priority_queue<Envelope, std::vector<Envelope>, Later> queue_;
};

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_NETWORK_H_
