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

#include <algorithm>
#include <chrono>
#include <numeric>

#include "vsagg/algebra/field.h"
#include "vsagg/common/error.h"
#include "vsagg/common/random.h"
#include "vsagg/common/types.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/sharing/sharing.h"

namespace vsagg::bench {
namespace {

using algebra::FieldElement;
using algebra::FieldPtr;
using Clock = std::chrono::steady_clock;

struct Workload {
  FieldPtr field;
  std::size_t n;
  std::size_t t;
  std::size_t l;
  std::uint64_t round = 1;
  std::vector<ParticipantId> ids;
  std::vector<sharing::DealerState> dealers;
  std::vector<std::vector<FieldElement>> inputs;
  std::vector<maskmac::MaskedVector> masked;
  maskmac::MaskedVector aggregate;
  // shares[i][h] = V_i(h) for the first t holders.
  std::vector<sharing::ShareMap> holder_shares;
};

Workload prepare(std::size_t n, std::size_t l, const BenchOptions& options, bool with_masks) {
  Workload w;
  w.field = algebra::PrimeField::default_field();
  w.n = n;
  w.t = options.threshold ? options.threshold : std::max<std::size_t>(2, n / 2);
  w.l = l;
  Rng rng(options.seed, n * 1000003 + l);
  for (std::size_t i = 1; i <= n; ++i) w.ids.push_back(static_cast<ParticipantId>(i));
  for (ParticipantId id : w.ids) w.dealers.emplace_back(id, w.t, w.field, rng);
  if (!with_masks) return w;

  std::vector<FieldElement> partials;
  for (const auto& d : w.dealers) partials.push_back(d.partial_auth_key());
  const maskmac::AuthKey s = maskmac::AuthKey::from_partials(partials);
  const maskmac::Prg prg(w.field);
  for (const auto& d : w.dealers) {
    std::vector<FieldElement> in;
    for (std::size_t e = 0; e < l; ++e) in.push_back(w.field->element(static_cast<std::int64_t>(rng.uniform_u64(1u << 20))));
    w.masked.push_back(
        maskmac::mask_vector(prg, in, d.masking_secret(), d.mac_key(), s, w.round));
    w.inputs.push_back(std::move(in));
  }
  w.aggregate = maskmac::aggregate_vectors(w.masked);
  for (const auto& d : w.dealers) {
    sharing::ShareMap shares;
    for (std::size_t h = 0; h < w.t; ++h) shares.emplace(w.ids[h], d.v_poly().eval(w.ids[h]));
    w.holder_shares.push_back(std::move(shares));
  }
  return w;
}

void setup_workload(Workload& w) {
  std::vector<sharing::ShareBundle> bundles;
  for (ParticipantId id : w.ids) bundles.emplace_back(id);
  for (const auto& d : w.dealers) {
    for (const auto& share : d.deal_round1(w.ids)) bundles[share.holder - 1].receive(share);
  }
  Rng rng(w.n, w.l);
  for (std::size_t i = 0; i < w.n; ++i) {
    std::vector<ParticipantId> others;
    for (ParticipantId id : w.ids) {
      if (id != w.ids[i]) others.push_back(id);
    }
    w.dealers[i].accumulate_sv(bundles[i], others);
    for (const auto& share : w.dealers[i].deal_round2(w.ids, rng)) {
      bundles[share.holder - 1].receive(share);
    }
  }
}

void mask_workload(const Workload& w) {
  const auto& d = w.dealers.front();
  std::vector<FieldElement> partials;
  for (const auto& dealer : w.dealers) partials.push_back(dealer.partial_auth_key());
  const maskmac::AuthKey s = maskmac::AuthKey::from_partials(partials);
  const maskmac::Prg prg(w.field);
  const auto out = maskmac::mask_vector(prg, w.inputs.front(), d.masking_secret(), d.mac_key(), s,
                                        w.round);
  if (out.size() != w.l) throw Error(ErrorCode::kInvalidArgument, "bench mask size");
}

void aggregate_workload(const Workload& w) {
  const auto out = maskmac::aggregate_vectors(w.masked);
  if (out.size() != w.l) throw Error(ErrorCode::kInvalidArgument, "bench aggregate size");
}

void verify_workload(const Workload& w) {
  FieldElement k = w.field->zero();
  for (std::size_t i = 0; i < w.n; ++i) {
    k += sharing::reconstruct_at(w.holder_shares[i], w.ids[i], w.t);
  }
  std::vector<FieldElement> partials;
  for (const auto& d : w.dealers) partials.push_back(d.partial_auth_key());
  const maskmac::AuthKey s = maskmac::AuthKey::from_partials(partials);
  const maskmac::Prg prg(w.field);
  for (std::size_t e = 0; e < w.l; ++e) {
    if (!maskmac::verify(prg, w.aggregate[e], k, s, {w.round, e})) {
      throw Error(ErrorCode::kVerificationFailed, "bench aggregate did not verify");
    }
  }
}

void decrypt_workload(const Workload& w) {
  FieldElement v0 = w.field->zero();
  for (std::size_t i = 0; i < w.n; ++i) v0 += sharing::reconstruct_secret(w.holder_shares[i], w.t);
  const maskmac::Prg prg(w.field);
  for (const auto& pair : w.aggregate) (void)maskmac::unmask(prg, pair, v0);
}

}  // namespace

std::string_view bench_phase_name(BenchPhase phase) {
  switch (phase) {
    case BenchPhase::kSetup: return "setup";
    case BenchPhase::kMask: return "mask";
    case BenchPhase::kAggregate: return "agg";
    case BenchPhase::kVerify: return "verify";
    case BenchPhase::kDecrypt: return "decrypt";
  }
  return "unknown";
}

std::vector<BenchPhase> parse_bench_phases(std::string_view spec) {
  if (spec == "all") return {std::begin(kAllBenchPhases), std::end(kAllBenchPhases)};
  std::vector<BenchPhase> out;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    bool found = false;
    for (BenchPhase p : kAllBenchPhases) {
      if (bench_phase_name(p) == item) {
        out.push_back(p);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::kConfigError, "unknown phase '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return out;
}

double BenchCell::mean_ms() const {
  if (samples_ms.empty()) return 0.0;
  return std::accumulate(samples_ms.begin(), samples_ms.end(), 0.0) /
         static_cast<double>(samples_ms.size());
}

double BenchCell::median_ms() const {
  if (samples_ms.empty()) return 0.0;
  std::vector<double> s = samples_ms;
  std::sort(s.begin(), s.end());
  const std::size_t mid = s.size() / 2;
  return s.size() % 2 ? s[mid] : 0.5 * (s[mid - 1] + s[mid]);
}

double BenchCell::min_ms() const {
  return samples_ms.empty() ? 0.0 : *std::min_element(samples_ms.begin(), samples_ms.end());
}

double BenchCell::throughput() const {
  const double ms = mean_ms();
  if (ms <= 0.0) return 0.0;
  std::size_t elements = gradients;
  if (phase == BenchPhase::kAggregate) elements *= parties;
  return static_cast<double>(elements) / (ms / 1000.0);
}

BenchCell run_cell(BenchPhase phase, std::size_t parties, std::size_t gradients,
                   const BenchOptions& options) {
  if (parties < 2 || gradients < 1 || options.repeat < 1) {
    throw Error(ErrorCode::kConfigError, "bench needs parties >= 2, gradients >= 1, repeat >= 1");
  }
  BenchCell cell{phase, parties, gradients, {}};
  for (std::size_t r = 0; r < options.repeat; ++r) {
    Workload w = prepare(parties, gradients, options, phase != BenchPhase::kSetup);
    const auto start = Clock::now();
    switch (phase) {
      case BenchPhase::kSetup: setup_workload(w); break;
      case BenchPhase::kMask: mask_workload(w); break;
      case BenchPhase::kAggregate: aggregate_workload(w); break;
      case BenchPhase::kVerify: verify_workload(w); break;
      case BenchPhase::kDecrypt: decrypt_workload(w); break;
    }
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    cell.samples_ms.push_back(elapsed.count());
  }
  return cell;
}

std::vector<BenchCell> run_grid(std::span<const BenchPhase> phases,
                                std::span<const std::size_t> parties,
                                std::span<const std::size_t> gradients,
                                const BenchOptions& options) {
  std::vector<BenchCell> cells;
  for (BenchPhase phase : phases) {
    for (std::size_t n : parties) {
      for (std::size_t l : gradients) cells.push_back(run_cell(phase, n, l, options));
    }
  }
  return cells;
}

void write_bench_csv(std::ostream& out, std::span<const BenchCell> cells) {
  out << kBenchCsvHeader << '\n';
  for (const auto& c : cells) {
    out << bench_phase_name(c.phase) << ',' << c.parties << ',' << c.gradients << ','
        << c.mean_ms() << ',' << c.throughput() << '\n';
  }
}

}  // namespace vsagg::bench
