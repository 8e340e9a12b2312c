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

import json
import pathlib

import pytest

import vsagg

CONFIG = pathlib.Path(__file__).resolve().parents[2] / "configs" / "honest.json"


def test_honest_round_decrypts_the_sum():
    r = vsagg.run_round(str(CONFIG))
    assert r["verified"]
    assert r["error"] is None
    assert r["decoded_sum"] == pytest.approx([1.125, -1.875, 3.125, 3.625])
    assert r["m_set"] == {1, 2, 3, 4, 5}


def test_tampered_round_is_rejected():
    doc = json.loads(CONFIG.read_text())
    doc["protocol"]["tamper"] = "inject_offset"
    r = vsagg.run_round(doc)
    assert not r["verified"]
    assert r["error"] == "VerificationFailed"
    assert r["released_sum"] == []


def test_bad_config_raises():
    with pytest.raises(vsagg.VsaggError, match="ConfigError"):
        vsagg.run_round({"participants": 0})


def test_recover_demo():
    ok = vsagg.recover_demo()
    assert ok["verified"] and ok["recovery_events"] == 2
    failed = vsagg.recover_demo(remove_setup_member=True)
    assert failed["error"] == "RecoveryQuorumFailure"


def test_transcript_is_ndjson():
    r = vsagg.run_round(str(CONFIG))
    lines = r["transcript"].splitlines()
    assert lines and all("event" in json.loads(line) for line in lines)


def test_training_and_hash():
    rows = vsagg.train(parties=6, rounds=3)
    assert len(rows) == 3 and rows[-1]["test_acc"] > 0.9
    assert vsagg.hash_to_field(1, 0) == 413387038245683635726147980549379633732
