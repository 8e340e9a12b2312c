# Copyright 2026 The vsagg Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the vsagg secure aggregation library."""

import json
import os

from ._core import VsaggError, hash_to_field, recover_demo, train, run_round_json

__all__ = ["VsaggError", "hash_to_field", "recover_demo", "run_round", "train"]


def run_round(config):
    """Runs one round. `config` is a dict, a JSON string, or a path to a JSON file."""
    if isinstance(config, dict):
        return run_round_json(json.dumps(config))
    if isinstance(config, (str, os.PathLike)) and os.path.exists(config):
        with open(config) as f:
            return run_round_json(f.read())
    return run_round_json(config)
