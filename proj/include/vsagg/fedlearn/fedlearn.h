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

#ifndef VSAGG_FEDLEARN_FEDLEARN_H_
#define VSAGG_FEDLEARN_FEDLEARN_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vsagg/common/random.h"
#include "vsagg/common/types.h"

namespace vsagg::fedlearn {

// Two-dimensional points with binary labels.
struct Dataset {
  std::vector<std::array<double, 2>> x;
  std::vector<int> y;

  std::size_t size() const { return y.size(); }
};

// Balanced classes drawn from N(-mean, 1) and N(+mean, 1) in both
// coordinates; labels alternate 0, 1.
Dataset make_blobs(std::size_t n, Rng& rng, double mean = 1.5);

// Logistic regression; w = (w_x, w_y, bias).
inline constexpr std::size_t kModelSize = 3;
using Weights = std::vector<double>;

double predict(const Weights& w, const std::array<double, 2>& x);
// Mean binary cross-entropy.
double loss(const Weights& w, const Dataset& data);
double accuracy(const Weights& w, const Dataset& data);
// Gradient of the mean loss over the whole shard.
Weights gradient(const Weights& w, const Dataset& data);

// tau gradient steps of size eta on the shard.
Weights local_update(Weights w, const Dataset& shard, double eta, int tau);

struct AggregationParams {
  std::size_t threshold = 2;
  std::size_t s_min = 1;
  int scale_bits = 16;
  double clip_bound = 8.0;
  std::string modulus = "default";
};

// One protocol round over the parties' vectors; members of `dropped`
// are offline for Masking only. Returns the decoded sum divided by the number
// of contributors, or nothing if the round failed or was rejected.
struct AggregateOutcome {
  std::optional<Weights> average;
  IdSet contributors;
};

AggregateOutcome secure_global_aggregate(const std::map<ParticipantId, Weights>& models,
                                         const IdSet& dropped, const AggregationParams& params,
                                         std::uint64_t seed, std::uint64_t round);

// Mean of the non-dropped parties' vectors in floating point.
AggregateOutcome plaintext_global_aggregate(const std::map<ParticipantId, Weights>& models,
                                            const IdSet& dropped);

struct TrainConfig {
  double eta = 0.1;
  int tau = 15;
  std::size_t s_min = 1;
  int rounds = 20;
  std::uint32_t parties = 24;
  double dropout = 0.0;
  std::uint64_t seed = 1;
  std::size_t samples_per_party = 40;
  std::size_t test_samples = 2000;
  // Zero picks parties / 2.
  std::size_t threshold = 0;
  int scale_bits = 16;
  double clip_bound = 8.0;
  bool secure = true;
};

struct RoundRecord {
  double dropout = 0.0;
  int round = 0;
  double train_loss = 0.0;
  double test_acc = 0.0;
};

// Federated training: each round every party runs local_update from the
// last global model it received, round(dropout * parties) of them drop out
// before Masking, and the rest are averaged.
std::vector<RoundRecord> train(const TrainConfig& config);

// train() once per dropout fraction, rows ordered by round then fraction.
std::vector<RoundRecord> dropout_experiment(const TrainConfig& base,
                                            std::span<const double> fractions);

inline constexpr std::array<double, 5> kDropoutFractions = {0.0, 1.0 / 24, 1.0 / 12, 1.0 / 6,
                                                            1.0 / 3};

inline constexpr const char* kAccuracyCsvHeader = "f,round,train_loss,test_acc";
void write_accuracy_csv(std::ostream& out, std::span<const RoundRecord> records);

}  // namespace vsagg::fedlearn

#endif  // VSAGG_FEDLEARN_FEDLEARN_H_
