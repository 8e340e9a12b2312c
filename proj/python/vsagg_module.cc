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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "vsagg/common/error.h"
#include "vsagg/fedlearn/fedlearn.h"
#include "vsagg/maskmac/maskmac.h"
#include "vsagg/protocol/round.h"
#include "vsagg/protocol/scenarios.h"

namespace py = pybind11;

namespace {

using namespace vsagg;

py::int_ to_int(const algebra::FieldElement& e) {
  return py::int_(py::str(e.to_string()));
}

py::dict result_dict(const protocol::RoundResult& r) {
  py::dict d;
  d["verified"] = r.verified;
  d["error"] = r.error ? py::object(py::str(std::string(error_code_name(*r.error)))) : py::none();
  d["error_message"] = r.error_message;
  d["phase"] = std::string(protocol::round_phase_name(r.state.phase));
  d["n_set"] = r.state.n_set;
  d["t_set"] = r.state.t_set;
  d["m_set"] = r.state.m_set;
  d["u_set"] = r.state.u_set;
  d["failed_ids"] = r.state.failed_ids;
  d["leader"] = r.state.leader ? py::object(py::int_(*r.state.leader)) : py::none();
  d["decoded_sum"] = r.decoded_sum;
  py::list released;
  if (const auto sum = r.released_sum()) {
    for (const auto& e : *sum) released.append(to_int(e));
  }
  d["released_sum"] = released;
  d["recovery_events"] = r.recovery_events;
  d["transmitted_setup_elements"] = r.transmitted_setup_elements;
  d["transcript"] = r.transcript.to_ndjson();
  return d;
}

py::dict run_round_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  const auto config = simnet::SimConfig::from_json(doc);
  const auto spec = protocol::RoundSpec::from_json(
      doc.contains("protocol") ? doc.at("protocol") : nlohmann::json::object());
  protocol::RoundResult r;
  {
    py::gil_scoped_release release;
    r = protocol::run_round(config, spec);
  }
  return result_dict(r);
}

py::dict recover_demo(std::uint64_t seed, bool remove_setup_member) {
  const auto sc = protocol::dropout_recovery_scenario(seed, remove_setup_member);
  return result_dict(protocol::run_round(sc.config, sc.spec));
}

py::list train(std::uint32_t parties, int rounds, double dropout, std::uint64_t seed, bool secure,
               int tau, double eta) {
  fedlearn::TrainConfig c;
  c.parties = parties;
  c.rounds = rounds;
  c.dropout = dropout;
  c.seed = seed;
  c.secure = secure;
  c.tau = tau;
  c.eta = eta;
  std::vector<fedlearn::RoundRecord> records;
  {
    py::gil_scoped_release release;
    records = fedlearn::train(c);
  }
  py::list out;
  for (const auto& r : records) {
    py::dict d;
    d["f"] = r.dropout;
    d["round"] = r.round;
    d["train_loss"] = r.train_loss;
    d["test_acc"] = r.test_acc;
    out.append(d);
  }
  return out;
}

py::int_ hash_to_field(std::uint64_t round, std::uint64_t index, const std::string& modulus) {
  protocol::RoundSpec spec;
  spec.modulus = modulus;
  return to_int(maskmac::hash_to_field(spec.field(), {round, index}));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Verifiable secure aggregation with dropout recovery";
  static py::exception<Error> error_type(m, "VsaggError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
      py::set_error(error_type, msg.c_str());
    }
  });
  m.def("run_round_json", &run_round_json, py::arg("document"),
        "Runs one round from a JSON document in the CLI config format.");
  m.def("recover_demo", &recover_demo, py::arg("seed") = 3,
        py::arg("remove_setup_member") = false);
  m.def("train", &train, py::arg("parties") = 24, py::arg("rounds") = 20,
        py::arg("dropout") = 0.0, py::arg("seed") = 1, py::arg("secure") = true,
        py::arg("tau") = 15, py::arg("eta") = 0.1);
  m.def("hash_to_field", &hash_to_field, py::arg("round"), py::arg("index"),
        py::arg("modulus") = "default");
}
