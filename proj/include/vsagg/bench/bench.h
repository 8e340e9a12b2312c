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

#ifndef VSAGG_BENCH_BENCH_H_
#define VSAGG_BENCH_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vsagg::bench {

enum class BenchPhase { kSetup, kMask, kAggregate, kVerify, kDecrypt };

inline constexpr BenchPhase kAllBenchPhases[] = {BenchPhase::kSetup, BenchPhase::kMask,
                                                 BenchPhase::kAggregate, BenchPhase::kVerify,
                                                 BenchPhase::kDecrypt};

std::string_view bench_phase_name(BenchPhase phase);
// "all" expands to every phase; otherwise a comma-separated list.
std::vector<BenchPhase> parse_bench_phases(std::string_view spec);

struct BenchCell {
  BenchPhase phase = BenchPhase::kSetup;
  std::size_t parties = 0;
  std::size_t gradients = 0;
  std::vector<double> samples_ms;

  double mean_ms() const;
  double median_ms() const;
  double min_ms() const;
  // Gradient elements processed per second at the mean time.
  double throughput() const;
};

struct BenchOptions {
  std::size_t threshold = 0;  // zero picks max(2, parties / 2)
  std::size_t repeat = 5;
  std::uint64_t seed = 1;
};

// Runs the workload of one phase for a round of `parties` participants with
// `gradients` elements each. Setup is two-step dealing between all parties;
// mask is one participant masking its vector; aggregate sums all vectors;
// verify reconstructs every k_i and checks the aggregate; decrypt
// reconstructs every V_i(0) and unmasks. Inputs are prepared outside the
// timed region.
BenchCell run_cell(BenchPhase phase, std::size_t parties, std::size_t gradients,
                   const BenchOptions& options);

std::vector<BenchCell> run_grid(std::span<const BenchPhase> phases,
                                std::span<const std::size_t> parties,
                                std::span<const std::size_t> gradients,
                                const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader =
    "phase,parties,gradients,mean_ms,throughput_elems_per_s";
void write_bench_csv(std::ostream& out, std::span<const BenchCell> cells);

}  // namespace vsagg::bench

#endif  // VSAGG_BENCH_BENCH_H_
