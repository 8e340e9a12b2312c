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

#include "vsagg/common/random.h"

#include "vsagg/common/error.h"

namespace vsagg {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::uniform_u64(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "zero bound");
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

mpz_class Rng::uniform_below(const mpz_class& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  // Rejection sampling over the minimal bit width keeps the draw uniform.
  while (true) {
    mpz_class candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w == 0 && excess > 0) word >>= excess;
      candidate <<= 64;
      mpz_class part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate += part;
    }
    if (candidate < bound) return candidate;
  }
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal(double mean, double stddev) {
  return std::normal_distribution<double>(mean, stddev)(engine_);
}

}  // namespace vsagg
