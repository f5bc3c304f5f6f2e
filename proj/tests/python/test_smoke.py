# Copyright 2026 The GSRP Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Smoke tests for the Python bindings."""

import pathlib

import numpy as np
import pytest

import gsrp

ROOT = pathlib.Path(__file__).resolve().parents[2]

NCM = np.array([[2, 0.3 + 0.4j, -0.1j], [0.3 - 0.4j, 1.5, 0.2], [0.1j, 0.2, 1.2]])
SOURCE = np.array([1, 0.5 - 0.5j, -0.3 + 0.8j])
SCM = NCM + 3 * np.outer(SOURCE, SOURCE.conj())
STEER = np.array([0.9, 0.4 - 0.6j, -0.2 + 0.7j])


def test_psds_match_frozen_values():
    sv2 = np.trace(NCM).real / 3
    assert gsrp.ds_psd(STEER, SCM) == pytest.approx(15.9187, rel=1e-12)
    assert gsrp.mvdr_psd(STEER, SCM, NCM) == pytest.approx(4.503668445093755, rel=1e-12)
    assert gsrp.mpdr_psd(STEER, SCM) == pytest.approx(4.3155050821317342, rel=1e-12)
    assert gsrp.mvcnr_psd(STEER, SCM, NCM) == pytest.approx(4.8933084965209632, rel=1e-12)
    assert gsrp.nmf_psd(STEER, SCM, sv2) == pytest.approx(5.4628345916266303, rel=1e-12)
    assert gsrp.mpcnr_psd(STEER, SCM, NCM) == pytest.approx(4.6888659639630728, rel=1e-12)
    assert gsrp.zeta2_flat(NCM, SCM) == pytest.approx(0.2020720463834236, rel=1e-12)
    assert gsrp.zeta2_frob(sv2, SCM) == pytest.approx(0.17666440383327528, rel=1e-12)


def test_psd_dimension_mismatch():
    with pytest.raises(gsrp.DimensionMismatch):
        gsrp.ds_psd(STEER[:2], SCM)


def test_errors_and_quantiles():
    assert gsrp.compute_error((0, 0, 0), (3, 4, 0)) == pytest.approx(5.0)
    assert gsrp.compute_error(350.0, 10.0) == pytest.approx(20.0)
    with pytest.raises(gsrp.DimensionMismatch):
        gsrp.compute_error(10.0, (1, 0, 0))
    e = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]
    assert gsrp.quantile(e, 0.25) == pytest.approx(1.75)
    assert gsrp.quantile(e, 0.75) == pytest.approx(5.25)


def test_bad_config_raises():
    with pytest.raises(gsrp.ConfigError):
        gsrp.parse_config("gsrp-config 1\nno_such_key = 3\n")


def test_simulate_and_wav_roundtrip(tmp_path):
    cfg = gsrp.load_config(ROOT / "configs" / "nearfield_mvcnr.cfg")
    scene = gsrp.simulate(cfg)
    samples = scene["samples"]
    assert samples.shape[0] == cfg.num_mics == 4
    assert samples.shape[1] > 0
    path = tmp_path / "scene.wav"
    gsrp.write_wav(samples, scene["sample_rate"], path)
    back, rate = gsrp.read_wav(path)
    assert rate == scene["sample_rate"]
    assert back.shape == samples.shape


def test_nearfield_localization():
    report = gsrp.localize(gsrp.nearfield_config("mvcnr"))
    assert report["frames"]
    assert report["mle"] < 0.05
    assert report["csv"].startswith("frame,time_s,")
    avg = report["average_map"]
    assert avg.size == 121 * 121


def test_golden_scenario():
    assert len(gsrp.golden_names()) == 11
    result = gsrp.run_golden("mpcnr_at_source")
    assert result["passed"]
    assert all(a["passed"] for a in result["assertions"])
    with pytest.raises(gsrp.ConfigError):
        gsrp.run_golden("no_such_scenario")
