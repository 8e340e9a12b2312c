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

#include "vsagg/bench/bench.h"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.h"

namespace vsagg::bench {
namespace {

using vsagg::testing::code_of;

TEST(BenchTest, PhaseParsing) {
  EXPECT_EQ(parse_bench_phases("all").size(), 5u);
  EXPECT_EQ(parse_bench_phases("mask,agg"),
            (std::vector<BenchPhase>{BenchPhase::kMask, BenchPhase::kAggregate}));
  EXPECT_EQ(bench_phase_name(BenchPhase::kAggregate), "agg");
  EXPECT_EQ(code_of([] { parse_bench_phases("mask,fly"); }), ErrorCode::kConfigError);
}

TEST(BenchTest, CellStatistics) {
  BenchCell c;
  c.phase = BenchPhase::kMask;
  c.gradients = 1000;
  c.parties = 4;
  c.samples_ms = {4.0, 1.0, 2.0};
  EXPECT_DOUBLE_EQ(c.mean_ms(), 7.0 / 3);
  EXPECT_DOUBLE_EQ(c.median_ms(), 2.0);
  EXPECT_DOUBLE_EQ(c.min_ms(), 1.0);
  EXPECT_NEAR(c.throughput(), 1000 / (7.0 / 3 / 1000), 1e-6);
}

TEST(BenchTest, GridAndCsv) {
  const BenchPhase phases[] = {BenchPhase::kSetup, BenchPhase::kDecrypt};
  const std::size_t parties[] = {3};
  const std::size_t grads[] = {4, 8};
  const auto cells = run_grid(phases, parties, grads, {0, 2, 1});
  ASSERT_EQ(cells.size(), 4u);
  for (const auto& c : cells) EXPECT_EQ(c.samples_ms.size(), 2u);
  std::ostringstream out;
  write_bench_csv(out, cells);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "phase,parties,gradients,mean_ms,throughput_elems_per_s");
}

}  // namespace
}  // namespace vsagg::bench
