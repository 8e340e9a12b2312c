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

#include "vsagg/simnet/channel.h"

#include <sodium.h>

#include <stdexcept>

#include "vsagg/common/error.h"
#include "vsagg/simnet/codec.h"

namespace vsagg::simnet {
namespace {

constexpr std::string_view kKeyDomain = "vsagg/channel-key/v1";
constexpr std::string_view kHeaderDomain = "vsagg/envelope/v1";

void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
    return true;
  }();
  (void)ready;
}

}  // namespace

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  ensure_sodium();
  std::array<std::uint8_t, 32> out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

ChannelKey derive_channel_key(const algebra::FieldElement& pairwise_key) {
  Bytes input(kKeyDomain.begin(), kKeyDomain.end());
  const Bytes k = pairwise_key.to_bytes();
  input.insert(input.end(), k.begin(), k.end());
  return sha256(input);
}

Bytes EnvelopeHeader::associated_data() const {
  ByteWriter w;
  w.str(kHeaderDomain).u32(src).u32(dst).u64(round).u64(seq).str(kind);
  return std::move(w).data();
}

std::array<std::uint8_t, kChannelNonceBytes> EnvelopeHeader::nonce() const {
  std::array<std::uint8_t, kChannelNonceBytes> n{};
  for (int i = 0; i < 4; ++i) n[i] = static_cast<std::uint8_t>(src >> (24 - 8 * i));
  for (int i = 0; i < 8; ++i) n[4 + i] = static_cast<std::uint8_t>(seq >> (56 - 8 * i));
  return n;
}

Bytes aead_encrypt(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                   std::span<const std::uint8_t> ad, std::span<const std::uint8_t> plaintext) {
  ensure_sodium();
  if (key.size() != crypto_aead_chacha20poly1305_ietf_KEYBYTES ||
      nonce.size() != crypto_aead_chacha20poly1305_ietf_NPUBBYTES) {
    throw Error(ErrorCode::kInvalidArgument, "bad AEAD key or nonce length");
  }
  Bytes out(plaintext.size() + crypto_aead_chacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(out.data(), &out_len, plaintext.data(),
                                            plaintext.size(), ad.data(), ad.size(), nullptr,
                                            nonce.data(), key.data());
  out.resize(out_len);
  return out;
}

Bytes aead_decrypt(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                   std::span<const std::uint8_t> ad, std::span<const std::uint8_t> sealed) {
  ensure_sodium();
  if (key.size() != crypto_aead_chacha20poly1305_ietf_KEYBYTES ||
      nonce.size() != crypto_aead_chacha20poly1305_ietf_NPUBBYTES) {
    throw Error(ErrorCode::kInvalidArgument, "bad AEAD key or nonce length");
  }
  if (sealed.size() < crypto_aead_chacha20poly1305_ietf_ABYTES) {
    throw Error(ErrorCode::kAuthFailure, "sealed payload shorter than tag");
  }
  Bytes out(sealed.size() - crypto_aead_chacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &out_len, nullptr, sealed.data(),
                                                sealed.size(), ad.data(), ad.size(),
                                                nonce.data(), key.data()) != 0) {
    throw Error(ErrorCode::kAuthFailure, "authentication tag mismatch");
  }
  out.resize(out_len);
  return out;
}

Bytes seal(const ChannelKey& key, const EnvelopeHeader& header,
           std::span<const std::uint8_t> plaintext) {
  const auto nonce = header.nonce();
  return aead_encrypt(key, nonce, header.associated_data(), plaintext);
}

Bytes open(const ChannelKey& key, const EnvelopeHeader& header,
           std::span<const std::uint8_t> sealed) {
  const auto nonce = header.nonce();
  return aead_decrypt(key, nonce, header.associated_data(), sealed);
}

}  // namespace vsagg::simnet
