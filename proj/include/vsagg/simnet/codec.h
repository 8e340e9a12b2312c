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

#ifndef VSAGG_SIMNET_CODEC_H_
#define VSAGG_SIMNET_CODEC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vsagg/algebra/field.h"
#include "vsagg/common/types.h"

namespace vsagg::simnet {

// Big-endian, length-prefixed message encoding shared by all envelopes.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& bytes(std::span<const std::uint8_t> v);
  ByteWriter& str(std::string_view v);
  ByteWriter& element(const algebra::FieldElement& e);
  ByteWriter& ids(const IdSet& ids);

  const Bytes& data() const& { return out_; }
  Bytes data() && { return std::move(out_); }

 private:
  Bytes out_;
};

// Reads what ByteWriter wrote; DecodeError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  Bytes bytes();
  std::string str();
  algebra::FieldElement element(const algebra::FieldPtr& field);
  IdSet ids();

  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const;

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace vsagg::simnet

#endif  // VSAGG_SIMNET_CODEC_H_
