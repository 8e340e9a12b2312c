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

#ifndef VSAGG_SIMNET_CHANNEL_H_
#define VSAGG_SIMNET_CHANNEL_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "vsagg/algebra/field.h"
#include "vsagg/common/types.h"

namespace vsagg::simnet {

inline constexpr std::size_t kChannelKeyBytes = 32;
inline constexpr std::size_t kChannelNonceBytes = 12;
inline constexpr std::size_t kChannelTagBytes = 16;

using ChannelKey = std::array<std::uint8_t, kChannelKeyBytes>;

// SHA-256 over a domain tag and the fixed-width encoding of the field key.
ChannelKey derive_channel_key(const algebra::FieldElement& pairwise_key);

struct EnvelopeHeader {
  ParticipantId src = 0;
  ParticipantId dst = 0;
  std::uint64_t round = 0;
  std::uint64_t seq = 0;
  std::string kind;

  Bytes associated_data() const;
  // src || seq: unique per sender because seq is never reused by the network.
  std::array<std::uint8_t, kChannelNonceBytes> nonce() const;
};

// ChaCha20-Poly1305 (IETF) with the header as associated data. Output is
// ciphertext || tag.
Bytes seal(const ChannelKey& key, const EnvelopeHeader& header,
           std::span<const std::uint8_t> plaintext);

// AuthFailure if the tag does not verify under key and header.
Bytes open(const ChannelKey& key, const EnvelopeHeader& header,
           std::span<const std::uint8_t> sealed);

// Raw AEAD primitive, exposed for test vectors.
Bytes aead_encrypt(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                   std::span<const std::uint8_t> ad, std::span<const std::uint8_t> plaintext);
Bytes aead_decrypt(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                   std::span<const std::uint8_t> ad, std::span<const std::uint8_t> sealed);

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_CHANNEL_H_
