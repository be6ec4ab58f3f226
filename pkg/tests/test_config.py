import pytest
from pydantic import ValidationError

from ktgspin.config import GlobalSetting, SpinModel, SpinOptions


def test_defaults(monkeypatch):
    for key in ("KTG_WORKERS", "KTG_SEARCH__BUDGET", "KTG_SPIN__N_MAX"):
        monkeypatch.delenv(key, raising=False)
    setting = GlobalSetting()
    assert setting.search.budget == 100_000
    assert setting.search.max_insertions == 2
    assert not setting.search.use_kinks
    assert (setting.spin.n_min, setting.spin.n_max) == (2, 13)
    assert setting.algebra.max_carrier == 64
    assert setting.coloring.list_limit == 1000
    assert setting.workers == 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("KTG_SEARCH__BUDGET", "250")
    monkeypatch.setenv("KTG_SPIN__N_MAX", "5")
    monkeypatch.setenv("KTG_WORKERS", "3")
    setting = GlobalSetting()
    assert setting.search.budget == 250
    assert setting.spin.n_max == 5
    assert setting.workers == 3
    options = SpinOptions.from_settings(setting)
    assert options.n_range == (2, 5)
    assert options.budget == 250


def test_n_range_parsing():
    assert SpinOptions(n_range="2..5").n_range == (2, 5)
    assert SpinOptions(n_range=(3, 3)).n_range == (3, 3)


@pytest.mark.parametrize("value", [(1, 3), "5..2", "abc", "2..x"])
def test_n_range_rejected(value):
    with pytest.raises(ValueError):
        SpinOptions(n_range=value)


def test_from_settings_overrides():
    setting = GlobalSetting(search={"budget": 40})
    options = SpinOptions.from_settings(setting, budget=None, cut_position=1, cross_check=True)
    assert options.budget == 40
    assert options.cut_position == 1
    assert options.cross_check
    assert options.with_mirror


def test_spin_model_range():
    with pytest.raises(ValidationError):
        SpinModel(n_min=7, n_max=3)
    with pytest.raises(ValidationError):
        SpinOptions(max_insertions=9)
