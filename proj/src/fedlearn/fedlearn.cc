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

#include "vsagg/fedlearn/fedlearn.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>

#include "vsagg/common/error.h"
#include "vsagg/protocol/round.h"
#include "vsagg/simnet/config.h"

namespace vsagg::fedlearn {
namespace {

constexpr std::uint64_t kDataStream = 0xda7a;
constexpr std::uint64_t kTestStream = 0x7e57;
constexpr std::uint64_t kDropStream = 0xd209;

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Numerically stable -log(sigmoid(z)).
double softplus_neg(double z) { return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z)); }

}  // namespace

Dataset make_blobs(std::size_t n, Rng& rng, double mean) {
  Dataset d;
  d.x.reserve(n);
  d.y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    const double c = label == 1 ? mean : -mean;
    d.x.push_back({rng.normal(c, 1.0), rng.normal(c, 1.0)});
    d.y.push_back(label);
  }
  return d;
}

double predict(const Weights& w, const std::array<double, 2>& x) {
  return sigmoid(w[0] * x[0] + w[1] * x[1] + w[2]);
}

double loss(const Weights& w, const Dataset& data) {
  if (data.size() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double z = w[0] * data.x[i][0] + w[1] * data.x[i][1] + w[2];
    total += data.y[i] == 1 ? softplus_neg(z) : softplus_neg(-z);
  }
  return total / static_cast<double>(data.size());
}

double accuracy(const Weights& w, const Dataset& data) {
  if (data.size() == 0) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    correct += (predict(w, data.x[i]) >= 0.5 ? 1 : 0) == data.y[i] ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

Weights gradient(const Weights& w, const Dataset& data) {
  Weights g(kModelSize, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double r = predict(w, data.x[i]) - data.y[i];
    g[0] += r * data.x[i][0];
    g[1] += r * data.x[i][1];
    g[2] += r;
  }
  for (double& v : g) v /= static_cast<double>(data.size());
  return g;
}

Weights local_update(Weights w, const Dataset& shard, double eta, int tau) {
  if (shard.size() == 0) throw Error(ErrorCode::kInvalidArgument, "empty shard");
  for (int step = 0; step < tau; ++step) {
    const Weights g = gradient(w, shard);
    for (std::size_t k = 0; k < kModelSize; ++k) w[k] -= eta * g[k];
  }
  return w;
}

AggregateOutcome secure_global_aggregate(const std::map<ParticipantId, Weights>& models,
                                         const IdSet& dropped, const AggregationParams& params,
                                         std::uint64_t seed, std::uint64_t round) {
  simnet::SimConfig config;
  config.seed = seed;
  config.round = round;
  config.participants = static_cast<std::uint32_t>(models.size());
  // Dropped parties miss the masking window and are back for aggregation:
  // they can still serve as share holders but receive no result.
  for (ParticipantId id : dropped) {
    config.faults.push_back({id, simnet::Phase::kMasking, simnet::FaultAction::kDisconnect});
    config.faults.push_back({id, simnet::Phase::kAggregation, simnet::FaultAction::kReconnect});
  }
  protocol::RoundSpec spec;
  spec.threshold = params.threshold;
  spec.s_min = params.s_min;
  spec.scale_bits = params.scale_bits;
  spec.clip_bound = params.clip_bound;
  spec.modulus = params.modulus;
  spec.gradient_length = models.begin()->second.size();
  spec.gradients = models;

  const protocol::RoundResult r = protocol::run_round(config, spec);
  AggregateOutcome out;
  if (!r.verified || r.decoded_sum.empty()) return out;
  out.contributors = r.state.m_set;
  Weights avg = r.decoded_sum;
  for (double& v : avg) v /= static_cast<double>(out.contributors.size());
  out.average = std::move(avg);
  return out;
}

AggregateOutcome plaintext_global_aggregate(const std::map<ParticipantId, Weights>& models,
                                            const IdSet& dropped) {
  AggregateOutcome out;
  Weights sum;
  for (const auto& [id, w] : models) {
    if (dropped.contains(id)) continue;
    out.contributors.insert(id);
    if (sum.empty()) {
      sum = w;
    } else {
      for (std::size_t k = 0; k < w.size(); ++k) sum[k] += w[k];
    }
  }
  if (out.contributors.empty()) return out;
  for (double& v : sum) v /= static_cast<double>(out.contributors.size());
  out.average = std::move(sum);
  return out;
}

std::vector<RoundRecord> train(const TrainConfig& config) {
  if (config.parties < 2) throw Error(ErrorCode::kConfigError, "need at least two parties");
  if (config.tau < 1) throw Error(ErrorCode::kConfigError, "tau must be at least 1");
  if (config.dropout < 0.0 || config.dropout >= 1.0) {
    throw Error(ErrorCode::kConfigError, "dropout fraction must lie in [0, 1)");
  }
  if (config.s_min < 1 || config.s_min > config.parties) {
    throw Error(ErrorCode::kConfigError, "s_min must lie in [1, parties]");
  }
  Rng data_rng(config.seed, kDataStream);
  std::map<ParticipantId, Dataset> shards;
  Dataset train_all;
  for (ParticipantId id = 1; id <= config.parties; ++id) {
    Dataset shard = make_blobs(config.samples_per_party, data_rng);
    train_all.x.insert(train_all.x.end(), shard.x.begin(), shard.x.end());
    train_all.y.insert(train_all.y.end(), shard.y.begin(), shard.y.end());
    shards.emplace(id, std::move(shard));
  }
  Rng test_rng(config.seed, kTestStream);
  const Dataset test = make_blobs(config.test_samples, test_rng);

  AggregationParams params;
  params.threshold = config.threshold ? config.threshold : std::max<std::size_t>(2, config.parties / 2);
  params.s_min = config.s_min;
  params.scale_bits = config.scale_bits;
  params.clip_bound = config.clip_bound;

  const auto drop_count =
      static_cast<std::size_t>(std::lround(config.dropout * static_cast<double>(config.parties)));
  Rng drop_rng(config.seed, kDropStream);

  Weights global(kModelSize, 0.0);
  // The last global model each party received.
  std::map<ParticipantId, Weights> view;
  for (ParticipantId id = 1; id <= config.parties; ++id) view[id] = global;

  std::vector<RoundRecord> records;
  for (int round = 1; round <= config.rounds; ++round) {
    std::map<ParticipantId, Weights> local;
    for (const auto& [id, shard] : shards) {
      local[id] = local_update(view[id], shard, config.eta, config.tau);
    }
    std::vector<ParticipantId> ids(config.parties);
    std::iota(ids.begin(), ids.end(), 1u);
    std::shuffle(ids.begin(), ids.end(), drop_rng.engine());
    const IdSet dropped(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(drop_count));

    const AggregateOutcome agg =
        config.secure ? secure_global_aggregate(local, dropped, params, config.seed,
                                                static_cast<std::uint64_t>(round))
                      : plaintext_global_aggregate(local, dropped);
    if (agg.average) {
      global = *agg.average;
      for (ParticipantId id : agg.contributors) view[id] = global;
    }
    records.push_back({config.dropout, round, loss(global, train_all), accuracy(global, test)});
  }
  return records;
}

std::vector<RoundRecord> dropout_experiment(const TrainConfig& base,
                                            std::span<const double> fractions) {
  std::vector<std::vector<RoundRecord>> runs;
  for (double f : fractions) {
    TrainConfig c = base;
    c.dropout = f;
    runs.push_back(train(c));
  }
  std::vector<RoundRecord> rows;
  for (int r = 0; r < base.rounds; ++r) {
    for (const auto& run : runs) rows.push_back(run[static_cast<std::size_t>(r)]);
  }
  return rows;
}

void write_accuracy_csv(std::ostream& out, std::span<const RoundRecord> records) {
  out << kAccuracyCsvHeader << '\n';
  out << std::setprecision(10);
  for (const auto& r : records) {
    out << r.dropout << ',' << r.round << ',' << r.train_loss << ',' << r.test_acc << '\n';
  }
}

}  // namespace vsagg::fedlearn
