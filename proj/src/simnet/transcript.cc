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

#include "vsagg/simnet/transcript.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "vsagg/common/error.h"

namespace vsagg::simnet {

std::size_t Transcript::count(std::string_view event) const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [&](const auto& r) { return r.event == event; }));
}

std::size_t Transcript::count(std::string_view event, std::string_view kind) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [&](const auto& r) { return r.event == event && r.kind == kind; }));
}

std::string Transcript::to_ndjson() const {
  std::string out;
  for (const auto& r : records_) {
    nlohmann::ordered_json line = {{"t", r.time},     {"event", r.event}, {"src", r.src},
                                   {"dst", r.dst},    {"kind", r.kind},   {"digest", r.digest}};
    if (!r.detail.empty()) line["detail"] = r.detail;
    out += line.dump();
    out += '\n';
  }
  return out;
}

void Transcript::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  f << to_ndjson();
}

}  // namespace vsagg::simnet
