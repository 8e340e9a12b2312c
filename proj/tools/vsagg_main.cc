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

// Command-line entry point: round, bench, train and recover-demo.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsagg/bench/bench.h"
#include "vsagg/common/error.h"
#include "vsagg/common/random.h"
#include "vsagg/fedlearn/fedlearn.h"
#include "vsagg/group/variant.h"
#include "vsagg/protocol/round.h"
#include "vsagg/protocol/scenarios.h"
#include "vsagg/simnet/network.h"

namespace fs = std::filesystem;
using namespace vsagg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRejected = 2;

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("SECEL_SEED");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kConfigError, std::string("SECEL_SEED is not an integer: ") + v);
  }
}

std::string join(const std::vector<double>& v) {
  std::ostringstream out;
  out.precision(8);
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw Error(ErrorCode::kConfigError, "cannot write " + (dir / name).string());
  return f;
}

struct Globals {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
};

std::uint64_t resolve_seed(const Globals& g, std::uint64_t fallback) {
  if (g.seed) return *g.seed;
  if (auto s = env_seed()) return *s;
  return fallback;
}

int run_group_variant(const simnet::SimConfig& config, const protocol::RoundSpec& spec) {
  group::GroupVariantParams params;
  params.parties = config.participants;
  params.threshold = spec.threshold;
  params.seed = config.seed;
  group::GroupSession session(group::SchnorrGroup::toy(), params);

  // Contributors are whoever the fault schedule lets through Masking;
  // verifiers are whoever is online at Verification.
  simnet::Transcript scratch;
  simnet::Network net(config, scratch);
  std::map<ParticipantId, std::vector<double>> contributions;
  IdSet online;
  net.begin_phase(simnet::Phase::kMasking);
  for (ParticipantId id = 1; id <= config.participants; ++id) {
    if (!net.online(id) || net.drops_outbound(id)) continue;
    auto it = spec.gradients.find(id);
    if (it != spec.gradients.end()) {
      contributions.emplace(id, it->second);
    } else {
      Rng rng(config.seed, 0x2000 + id);
      std::vector<double> g;
      for (std::size_t e = 0; e < spec.gradient_length; ++e) {
        g.push_back((2.0 * rng.uniform01() - 1.0) * params.clip_bound);
      }
      contributions.emplace(id, std::move(g));
    }
  }
  net.begin_phase(simnet::Phase::kVerification);
  for (ParticipantId id = 1; id <= config.participants; ++id) {
    if (net.online(id)) online.insert(id);
  }

  const group::SchnorrGroup& g = session.group();
  std::function<void(std::vector<group::GroupMaskedPair>&)> tamper;
  if (spec.tamper != protocol::TamperPolicy::kHonest) {
    Rng tamper_rng(config.seed, 0xa66);
    const auto offset = static_cast<std::int64_t>(1) << params.scale_bits;
    tamper = [&g, policy = spec.tamper, offset, tamper_rng](auto& agg) mutable {
      for (std::size_t e = 0; e < agg.size(); ++e) {
        switch (policy) {
          case protocol::TamperPolicy::kFlipElement:
            if (e == 0) agg[e].c1 = g.mul(agg[e].c1, g.generator());
            break;
          case protocol::TamperPolicy::kInjectOffset:
            agg[e].c1 = g.mul(agg[e].c1, g.exp(g.exponent_field()->element(offset)));
            break;
          case protocol::TamperPolicy::kSubstituteAll:
            agg[e].c1 = g.exp(g.exponent_field()->random(tamper_rng));
            agg[e].c2 = g.exp(g.exponent_field()->random(tamper_rng));
            break;
          case protocol::TamperPolicy::kHonest:
            break;
        }
      }
    };
  }
  const group::GroupRoundResult r = session.run_round(config.round, contributions, online, tamper);
  if (!r.verified) {
    std::cout << "verified=false error=VerificationFailed\n";
    return kExitRejected;
  }
  std::cout << "verified=true decrypted=" << join(r.decoded_sum) << "\n";
  return kExitOk;
}

int cmd_round(const Globals& g, const std::string& config_path, const std::string& variant,
              const std::string& tamper) {
  std::ifstream f(config_path);
  if (!f) throw Error(ErrorCode::kConfigError, "cannot read config '" + config_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  simnet::SimConfig config = simnet::SimConfig::from_json(doc);
  config.seed = resolve_seed(g, config.seed);
  protocol::RoundSpec spec =
      protocol::RoundSpec::from_json(doc.contains("protocol") ? doc.at("protocol") : nlohmann::json::object());
  if (!tamper.empty()) spec.tamper = protocol::parse_tamper_policy(tamper);

  if (variant == "group") {
    if (!doc.contains("protocol") || !doc.at("protocol").contains("scale_bits")) spec.scale_bits = 10;
    return run_group_variant(config, spec);
  }

  const protocol::RoundResult r = protocol::run_round(config, spec);
  auto out = open_output(g.out_dir, "transcript.ndjson");
  out << r.transcript.to_ndjson();
  if (r.verified) {
    std::cout << "verified=true decrypted=" << join(r.decoded_sum) << "\n";
    return kExitOk;
  }
  std::cout << "verified=false error="
            << (r.error ? error_code_name(*r.error) : std::string_view("Unknown")) << "\n";
  return kExitRejected;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfigError, "not a number: '" + item + "'");
    }
  }
  return out;
}

int cmd_bench(const Globals& g, const std::string& phases, const std::string& parties,
              const std::string& gradients, std::size_t repeat) {
  bench::BenchOptions options;
  options.repeat = repeat;
  options.seed = resolve_seed(g, 1);
  const auto cells = bench::run_grid(bench::parse_bench_phases(phases), parse_list(parties),
                                     parse_list(gradients), options);
  auto out = open_output(g.out_dir, "bench.csv");
  bench::write_bench_csv(out, cells);
  bench::write_bench_csv(std::cout, cells);
  return kExitOk;
}

int cmd_train(const Globals& g, fedlearn::TrainConfig config, std::optional<double> f) {
  config.seed = resolve_seed(g, config.seed);
  std::vector<fedlearn::RoundRecord> rows;
  if (f) {
    config.dropout = *f;
    rows = fedlearn::train(config);
  } else {
    rows = fedlearn::dropout_experiment(config, fedlearn::kDropoutFractions);
  }
  auto out = open_output(g.out_dir, "accuracy.csv");
  fedlearn::write_accuracy_csv(out, rows);
  for (const auto& r : rows) {
    if (r.round == config.rounds) {
      std::cout << "f=" << r.dropout << " test_acc=" << r.test_acc << " train_loss=" << r.train_loss
                << "\n";
    }
  }
  return kExitOk;
}

std::string ids(const IdSet& s) {
  std::string out = "{";
  for (ParticipantId id : s) out += (out.size() > 1 ? "," : "") + std::to_string(id);
  return out + "}";
}

int cmd_recover_demo(const Globals& g, bool remove_setup_member) {
  auto scenario = protocol::dropout_recovery_scenario(3, remove_setup_member);
  scenario.config.seed = resolve_seed(g, scenario.config.seed);
  const protocol::RoundResult r = protocol::run_round(scenario.config, scenario.spec);
  auto out = open_output(g.out_dir, "transcript.ndjson");
  out << r.transcript.to_ndjson();

  std::cout << "participants N=" << ids(r.state.n_set) << " threshold t=" << scenario.spec.threshold
            << "\n";
  std::cout << "setup complete T=" << ids(r.state.t_set) << "\n";
  std::cout << "contributed M=" << ids(r.state.m_set) << "\n";
  std::cout << "reached verification U=" << ids(r.state.u_set) << "\n";
  for (const auto& rec : r.transcript.records()) {
    if (rec.event == "lose_shares") {
      std::cout << "t=" << rec.time << " participant " << rec.src << " lost its setup shares\n";
    } else if (rec.event == "recovery") {
      std::cout << "t=" << rec.time << " participant " << rec.src << " recovered s_v (" << rec.detail
                << ")\n";
    } else if (rec.event == "leader") {
      std::cout << "t=" << rec.time << " participant " << rec.src << " elected leader\n";
    } else if (rec.event == "abort") {
      std::cout << "t=" << rec.time << " round aborted: " << rec.kind << " " << rec.detail << "\n";
    }
  }
  std::cout << "recovery events: " << r.recovery_events << "\n";
  if (!r.verified) {
    std::cout << "verified=false error="
              << (r.error ? error_code_name(*r.error) : std::string_view("Unknown")) << "\n";
    return kExitRejected;
  }
  for (const auto& [id, p] : r.participants) {
    if (p.plaintext) {
      std::cout << "participant " << id << " decrypted the sum"
                << (p.recovered ? " after recovery" : "") << "\n";
    }
  }
  std::cout << "verified=true decrypted=" << join(r.decoded_sum) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifiable secure aggregation: simulator, benchmarks and training driver"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--out", globals.out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed (overrides SECEL_SEED and config)");

  auto* round = app.add_subcommand("round", "Run one round from a JSON config");
  std::string config_path;
  std::string variant = "scalar";
  std::string tamper;
  round->add_option("--config", config_path, "Scenario JSON")->required();
  round->add_option("--variant", variant, "scalar or group")
      ->check(CLI::IsMember({"scalar", "group"}))
      ->capture_default_str();
  round->add_option("--tamper", tamper, "honest, flip_element, substitute_all, inject_offset");

  auto* bench_cmd = app.add_subcommand("bench", "Per-phase timing grid");
  std::string phases = "all";
  std::string parties = "10,20";
  std::string gradients = "256,512";
  std::size_t repeat = 5;
  bench_cmd->add_option("--phases", phases)->capture_default_str();
  bench_cmd->add_option("--parties", parties)->capture_default_str();
  bench_cmd->add_option("--gradients", gradients)->capture_default_str();
  bench_cmd->add_option("--repeat", repeat)->capture_default_str();

  auto* train_cmd = app.add_subcommand("train", "Federated training under dropout");
  fedlearn::TrainConfig train_config;
  std::optional<double> f;
  bool plaintext = false;
  train_cmd->add_option("--f", f, "Dropout fraction; default sweeps 0, 1/24, 1/12, 1/6, 1/3");
  train_cmd->add_option("--rounds", train_config.rounds)->capture_default_str();
  train_cmd->add_option("--parties", train_config.parties)->capture_default_str();
  train_cmd->add_option("--tau", train_config.tau)->capture_default_str();
  train_cmd->add_option("--eta", train_config.eta)->capture_default_str();
  train_cmd->add_option("--s-min", train_config.s_min)->capture_default_str();
  train_cmd->add_flag("--plaintext", plaintext, "Average in the clear instead of a secure round");

  auto* demo = app.add_subcommand("recover-demo", "Walk through the dropout-recovery scenario");
  bool remove_setup_member = false;
  demo->add_flag("--remove-setup-member", remove_setup_member,
                 "Disconnect one setup-complete member at verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (round->parsed()) return cmd_round(globals, config_path, variant, tamper);
    if (bench_cmd->parsed()) return cmd_bench(globals, phases, parties, gradients, repeat);
    if (train_cmd->parsed()) {
      train_config.secure = !plaintext;
      return cmd_train(globals, train_config, f);
    }
    if (demo->parsed()) return cmd_recover_demo(globals, remove_setup_member);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::kConfigError) std::cerr << app.help();
    return kExitConfig;
  }
  return kExitConfig;
}
