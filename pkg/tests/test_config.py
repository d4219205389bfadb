import json

import pytest

from sensesim import Mode, PipelineConfig, Pos


def test_defaults():
    cfg = PipelineConfig()
    assert cfg.epsilon == 0.01
    assert cfg.max_iterations == 10
    assert cfg.window == 0
    assert cfg.min_feature_count == 2
    assert cfg.high_freq_cutoff == 0.5
    assert cfg.freq_damping_constant == 100.0
    assert not cfg.toy_mode
    assert cfg.tokenize_mode() is Mode.TAGGED
    assert cfg.pos_factor_weights()[Pos.NOUN] == 1.0
    assert cfg.pos_factor_weights()[Pos.VERB] == 0.6


def test_validation():
    with pytest.raises(ValueError):
        PipelineConfig(window=2)
    with pytest.raises(ValueError):
        PipelineConfig(epsilon=0.0)
    with pytest.raises(ValueError):
        PipelineConfig(mode="xml")


def test_dict_round_trip():
    cfg = PipelineConfig(epsilon=0.05, mode="plain", toy_mode=True)
    assert PipelineConfig.from_dict(cfg.to_dict()) == cfg


def test_unknown_field_rejected():
    with pytest.raises(ValueError, match="unknown"):
        PipelineConfig.from_dict({"episolon": 0.05})


def test_load_with_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"epsilon": 0.05, "window": 1}), encoding="utf-8")
    cfg = PipelineConfig.load(str(path))
    assert cfg.epsilon == 0.05 and cfg.window == 1
    cfg2 = PipelineConfig.load(str(path), {"epsilon": 0.2})
    assert cfg2.epsilon == 0.2 and cfg2.window == 1
