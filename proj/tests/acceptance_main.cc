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

// Acceptance suite: one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "oracles.h"
#include "vsagg/algebra/field.h"
#include "vsagg/algebra/polynomial.h"
#include "vsagg/bench/bench.h"
#include "vsagg/common/error.h"
#include "vsagg/fedlearn/fedlearn.h"
#include "vsagg/group/bsgs.h"
#include "vsagg/group/variant.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/protocol/round.h"
#include "vsagg/protocol/scenarios.h"
#include "vsagg/sharing/sharing.h"

namespace {

using namespace vsagg;
using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::PrimeField;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1. Decrypted aggregate equals the plaintext sum exactly; decoded reals
// within M * 2^-16.
Verdict round_exactness() {
  const auto start = Clock::now();
  Verdict v;
  Rng rng(0xacc1);
  std::size_t trials = 0;
  std::size_t exact = 0;
  double worst = 0;
  for (std::uint32_t n : {3u, 5u, 10u}) {
    for (std::size_t l : {16u, 256u}) {
      for (int trial = 0; trial < 100; ++trial) {
        simnet::SimConfig config;
        config.participants = n;
        config.seed = rng.next_u64();
        protocol::RoundSpec spec;
        spec.threshold = std::max<std::size_t>(2, n / 2);
        spec.gradient_length = l;
        // Every other trial one participant's upload is lost, so M < N.
        IdSet m_set;
        for (ParticipantId id = 1; id <= n; ++id) m_set.insert(id);
        if (trial % 2) {
          const auto dropped = static_cast<ParticipantId>(1 + rng.uniform_u64(n));
          config.faults.push_back({dropped, simnet::Phase::kMasking,
                                   simnet::FaultAction::kDropOutbound});
          m_set.erase(dropped);
        }
        for (ParticipantId id = 1; id <= n; ++id) {
          std::vector<double> g(l);
          for (double& x : g) x = rng.uniform01() * 16 - 8;
          spec.gradients[id] = g;
        }
        const auto r = protocol::run_round(config, spec);
        ++trials;
        const auto released = r.released_sum();
        if (!r.verified || !released || r.state.m_set != m_set) {
          v.pass = false;
          v.detail = "round failed: " + r.error_message;
          continue;
        }
        // Oracle: round(w * 2^16) summed as integers, reduced mod p.
        const mpz_class p = spec.field()->modulus();
        bool same = true;
        for (std::size_t e = 0; e < l; ++e) {
          mpz_class acc = 0;
          double real = 0;
          for (ParticipantId id : m_set) {
            acc += mpz_class(static_cast<long>(std::llround(spec.gradients[id][e] * 65536.0)));
            real += spec.gradients[id][e];
          }
          mpz_class expected = acc % p;
          if (expected < 0) expected += p;
          same = same && (*released)[e].value() == expected;
          worst = std::max(worst, std::abs(r.decoded_sum[e] - real) /
                                      (static_cast<double>(m_set.size()) * std::ldexp(1.0, -16)));
        }
        exact += same ? 1 : 0;
      }
    }
  }
  const double secs = seconds_since(start);
  v.pass = v.pass && exact == trials && worst <= 1.0 && secs < 60;
  v.detail += std::to_string(exact) + "/" + std::to_string(trials) + " exact, worst error " +
              fmt("%.3f", worst) + " x M*2^-16, " + fmt("%.1f s", secs) + " (limit 60 s)";
  return v;
}

// 2. Random nonzero tamperings never verify; deliberate d1 = -s*d2 does.
Verdict tamper_soundness() {
  const FieldPtr f = PrimeField::mersenne61();
  const maskmac::Prg prg(f);
  Rng rng(0xacc2);
  int false_accepts = 0;
  int constructed = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const maskmac::AuthKey s(f->random_nonzero(rng));
    const FieldElement k = f->random(rng);
    const maskmac::RoundLabel label{1, static_cast<std::uint64_t>(trial)};
    const auto honest = maskmac::mask_and_tag(prg, f->random(rng), f->random(rng), k, s, label);
    FieldElement d1 = f->random(rng);
    const FieldElement d2 = f->random(rng);
    if (d1.is_zero() && d2.is_zero()) d1 = f->one();
    auto t = honest;
    t.c1 += d1;
    t.c2 += d2;
    false_accepts += maskmac::verify(prg, t, k, s, label) ? 1 : 0;
    if (trial < 1000) {
      auto c = honest;
      c.c1 -= s.value() * d2;
      c.c2 += d2;
      constructed += maskmac::verify(prg, c, k, s, label) ? 1 : 0;
    }
  }
  return {false_accepts == 0 && constructed == 1000,
          std::to_string(false_accepts) + " false accepts in 10000 random tamperings; " +
              std::to_string(constructed) + "/1000 constructed d1=-s*d2 accepted"};
}

// 3. Exhaustive hiding at toy scale.
Verdict threshold_hiding() {
  const auto start = Clock::now();
  bool ok = true;
  std::size_t cases = 0;
  std::size_t views = 0;
  for (std::uint32_t p : {7u, 11u, 31u}) {
    for (std::size_t t : {2u, 3u}) {
      for (std::size_t n = t; n <= 5; ++n) {
        const auto r = oracle::shamir_hiding(p, t, n);
        ok = ok && r.hiding && r.determined;
        views += r.views;
        ++cases;
      }
    }
  }
  for (auto [p, t, n] : {std::tuple{3u, 2u, 2u}, std::tuple{5u, 2u, 3u}}) {
    const auto r = oracle::two_step_hiding(p, t, n);
    ok = ok && r.hiding && r.determined;
    views += r.views;
    ++cases;
  }
  const double secs = seconds_since(start);
  return {ok && secs < 30, std::to_string(cases) + " (p,t,N) cases, " + std::to_string(views) +
                               " distinct views, " + fmt("%.1f s", secs) + " (limit 30 s)"};
}

// 4. Seven-participant dropout scenario and its quorum-failure variant.
Verdict dropout_recovery() {
  const auto sc = protocol::dropout_recovery_scenario();
  const auto r = protocol::run_round(sc.config, sc.spec);
  bool ok = r.verified && !r.error && r.recovery_events == 2;
  std::vector<algebra::FieldElement> reference;
  for (ParticipantId id : {1u, 2u, 4u, 5u}) {
    const auto& p = r.participants.at(id).plaintext;
    if (!p) {
      ok = false;
      continue;
    }
    if (reference.empty()) reference = *p;
    ok = ok && *p == reference;
  }
  ok = ok && r.participants.at(4).recovered && r.participants.at(5).recovered;
  const auto bad = protocol::dropout_recovery_scenario(3, true);
  const auto f1 = protocol::run_round(bad.config, bad.spec);
  const auto f2 = protocol::run_round(bad.config, bad.spec);
  const bool fails = f1.error == ErrorCode::kRecoveryQuorumFailure && !f1.released_sum() &&
                     f1.transcript.to_ndjson() == f2.transcript.to_ndjson();
  return {ok && fails, "M=" + std::to_string(r.state.m_set.size()) + ", " +
                           std::to_string(r.recovery_events) +
                           " recoveries, losers decrypt the common sum: " +
                           (ok ? "yes" : "no") + "; one helper removed -> " +
                           (fails ? "RecoveryQuorumFailure (replayed identically)" : "no failure")};
}

// 5. Two-step dealing against the direct bivariate oracle, and element counts.
Verdict dealing_equivalence() {
  Rng rng(0xacc5);
  int agree = 0;
  bool counts = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldPtr f = trial % 2 ? PrimeField::create(31) : PrimeField::default_field();
    const std::size_t n = 2 + rng.uniform_u64(7);
    const std::size_t t = 2 + rng.uniform_u64(n - 1);
    std::vector<ParticipantId> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(static_cast<ParticipantId>(i));
    std::vector<algebra::UniPoly> v;
    FieldElement secret = f->zero();
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(algebra::UniPoly::random(f, t - 1, f->random(rng), rng));
      secret += v.back().constant();
    }
    // Two-step dealing.
    std::vector<sharing::DealerState> dealers;
    std::vector<sharing::ShareBundle> bundles;
    for (std::size_t i = 0; i < n; ++i) {
      dealers.emplace_back(ids[i], t, v[i], f->one());
      bundles.emplace_back(ids[i]);
    }
    std::size_t two_step = 0;
    for (auto& d : dealers) {
      for (const auto& s : d.deal_round1(ids)) {
        bundles[s.holder - 1].receive(s);
        ++two_step;
      }
    }
    sharing::ShareMap sv;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ParticipantId> others;
      for (auto id : ids) {
        if (id != ids[i]) others.push_back(id);
      }
      sv.emplace(ids[i], dealers[i].accumulate_sv(bundles[i], others));
      for (const auto& s : dealers[i].deal_round2(ids, rng)) {
        bundles[s.holder - 1].receive(s);
        ++two_step;
      }
    }
    // Direct dealing of F_i with F_i(x, 0) = V_i(x).
    std::size_t direct = 0;
    sharing::ShareMap at_zero;
    FieldElement f00 = f->zero();
    for (std::size_t i = 0; i < n; ++i) {
      const auto F = oracle::symmetric_extension(v[i], rng);
      f00 += F.eval(f->zero(), f->zero());
      for (const auto& s : sharing::deal_direct(ids[i], F, ids)) {
        direct += s.row().coeffs().size();
        auto [it, fresh] = at_zero.try_emplace(s.holder, s.row().eval(0));
        if (!fresh) it->second += s.row().eval(0);
      }
      const FieldElement own = F.row(f->element(ids[i])).eval(0);
      auto [it, fresh] = at_zero.try_emplace(ids[i], own);
      if (!fresh) it->second += own;
    }
    const FieldElement two_step_secret = sharing::reconstruct_secret(sv, t);
    agree += (two_step_secret == secret && two_step_secret == f00 &&
              sharing::reconstruct_secret(at_zero, t) == f00)
                 ? 1
                 : 0;
    counts = counts && two_step == 2 * n * (n - 1) && direct == n * (n - 1) * t;
  }
  // The protocol's own accounting agrees for a fault-free round.
  simnet::SimConfig config;
  config.participants = 6;
  protocol::RoundSpec spec;
  spec.threshold = 3;
  spec.gradient_length = 2;
  const auto r = protocol::run_round(config, spec);
  const bool round_count = r.transmitted_setup_elements == 2 * 6 * 5;
  return {agree == 1000 && counts && round_count,
          std::to_string(agree) + "/1000 agree with sum V_i(0) and direct F(0,0); element counts " +
              (counts ? "2N(N-1) vs N(N-1)t in every trial" : "MISMATCH") +
              "; protocol round N=6 sent " + std::to_string(r.transmitted_setup_elements)};
}

// 6. Group variant: reuse, BSGS sweep, scalar/exponent equivalence.
Verdict group_variant() {
  const auto start = Clock::now();
  const group::GroupPtr g = group::SchnorrGroup::toy();
  Rng rng(0xacc6);
  group::GroupSession session(g, {6, 3, 10, 8.0, 66});
  int good_rounds = 0;
  for (std::uint64_t round = 1; round <= 10; ++round) {
    std::map<ParticipantId, std::vector<double>> in;
    IdSet online;
    for (ParticipantId id = 1; id <= 6; ++id) {
      std::vector<double> x(8);
      for (double& e : x) e = std::round((rng.uniform01() * 16 - 8) * 1024) / 1024;
      in[id] = x;
      if (id != round % 6 + 1) online.insert(id);
    }
    const auto r = session.run_round(round, in, online);
    bool ok = r.verified && r.decoded_sum.size() == 8;
    for (std::size_t e = 0; ok && e < 8; ++e) {
      std::int64_t expected = 0;
      for (const auto& [id, x] : in) expected += std::llround(x[e] * 1024);
      ok = r.fixed_point_sum[e] == expected;
    }
    good_rounds += ok ? 1 : 0;
  }
  const bool one_setup = session.setup_runs() == 1;

  const group::BabyStepGiantStep solver(g, 1 << 16);
  std::uint64_t swept = 0;
  group::GroupElement h = g->identity();
  for (std::uint64_t x = 0; x < (1u << 16); ++x) {
    if (solver.solve(h) == x) ++swept;
    h = g->mul(h, g->generator());
  }

  const FieldPtr zq = g->exponent_field();
  const maskmac::Prg prg(zq);
  int equal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng.uniform_u64(5);
    const maskmac::RoundLabel label{static_cast<std::uint64_t>(trial), rng.uniform_u64(64)};
    const maskmac::AuthKey s(zq->random_nonzero(rng));
    std::vector<maskmac::MaskedPair> scalar;
    std::vector<group::GroupMaskedPair> lifted;
    FieldElement v0 = zq->zero();
    FieldElement k = zq->zero();
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      const FieldElement w = zq->element(static_cast<std::int64_t>(rng.uniform_u64(1 << 16)));
      const FieldElement vi = zq->random(rng);
      const FieldElement ki = zq->random(rng);
      v0 += vi;
      k += ki;
      scalar.push_back(maskmac::mask_and_tag(prg, w, vi, ki, s, label));
      lifted.push_back(group::group_mask_and_tag(*g, prg, w, vi, ki, s, label));
      ok = ok && lifted.back().c1 == g->exp(scalar.back().c1) &&
           lifted.back().c2 == g->exp(scalar.back().c2);
    }
    const auto sa = maskmac::aggregate(scalar);
    const auto ga = group::group_aggregate(*g, lifted);
    ok = ok && ga.c1 == g->exp(sa.c1) && ga.c2 == g->exp(sa.c2);
    ok = ok && group::group_verify(*g, ga, s, group::prg_in_exponent(*g, prg, g->exp(k), label),
                                   label) == maskmac::verify(prg, sa, k, s, label);
    ok = ok && group::group_unmask(*g, prg, ga, g->exp(v0)) ==
                   g->exp(maskmac::unmask(prg, sa, v0));
    equal += ok ? 1 : 0;
  }
  const double secs = seconds_since(start);
  return {good_rounds == 10 && one_setup && swept == (1u << 16) && equal == 500 && secs < 120,
          std::to_string(good_rounds) + "/10 rounds on one setup, BSGS " + std::to_string(swept) +
              "/65536 exact, " + std::to_string(equal) + "/500 exponent-lift matches, " +
              fmt("%.1f s", secs) + " (limit 120 s)"};
}

// 7. Doubling l doubles masking and aggregation time; setup ignores l.
// The two sizes are measured in alternation and compared by their fastest
// sample, which is the least noisy estimate of the work itself.
Verdict complexity_growth() {
  const std::size_t base = 2048;
  auto ratio = [&](bench::BenchPhase phase, std::size_t n) {
    const bench::BenchOptions one{0, 1, 7};
    bench::run_cell(phase, n, base, one);  // warm-up
    double small = 1e300;
    double large = 1e300;
    for (int r = 0; r < 15; ++r) {
      small = std::min(small, bench::run_cell(phase, n, base, one).min_ms());
      large = std::min(large, bench::run_cell(phase, n, 2 * base, one).min_ms());
    }
    return large / small;
  };
  const double mask = ratio(bench::BenchPhase::kMask, 10);
  const double agg = ratio(bench::BenchPhase::kAggregate, 10);
  const double setup = std::abs(ratio(bench::BenchPhase::kSetup, 40) - 1.0);
  const bool ok = mask >= 1.6 && mask <= 2.4 && agg >= 1.6 && agg <= 2.4 && setup < 0.10;
  return {ok, "l 2048->4096 at N=10: mask x" + fmt("%.2f", mask) + ", agg x" + fmt("%.2f", agg) +
                  " (band [1.6, 2.4]); setup at N=40 varies " + fmt("%.1f%%", setup * 100) +
                  " (limit 10%)"};
}

// 8. Accuracy under dropout on the synthetic task.
Verdict dropout_accuracy() {
  const auto start = Clock::now();
  fedlearn::TrainConfig base;
  base.parties = 24;
  const auto secure = fedlearn::dropout_experiment(base, fedlearn::kDropoutFractions);
  base.secure = false;
  const auto plain = fedlearn::dropout_experiment(base, fedlearn::kDropoutFractions);
  std::map<double, double> final_secure;
  std::map<double, double> final_plain;
  for (const auto& r : secure) final_secure[r.dropout] = r.test_acc;
  for (const auto& r : plain) final_plain[r.dropout] = r.test_acc;
  double gap = 0;
  for (const auto& [f, acc] : final_secure) gap = std::max(gap, std::abs(acc - final_plain[f]));
  const double drop = final_secure[0.0] - final_secure[1.0 / 3];
  const double secs = seconds_since(start);
  return {drop <= 0.05 && gap <= 0.01 && secs < 300,
          "acc f=0 " + fmt("%.4f", final_secure[0.0]) + ", f=1/3 " +
              fmt("%.4f", final_secure[1.0 / 3]) + " (drop " + fmt("%.2f", drop * 100) +
              " pts, limit 5); secure vs plaintext max gap " + fmt("%.2f", gap * 100) +
              " pts (limit 1); " + fmt("%.1f s", secs) + " (limit 300 s)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"end-to-end round exactness", round_exactness},
      {"tamper soundness", tamper_soundness},
      {"threshold hiding", threshold_hiding},
      {"dropout recovery", dropout_recovery},
      {"two-step dealing equivalence", dealing_equivalence},
      {"group variant", group_variant},
      {"complexity growth", complexity_growth},
      {"dropout accuracy", dropout_accuracy},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] %d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
