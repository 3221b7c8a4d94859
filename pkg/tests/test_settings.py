"""Tests for settings and the process-pool helper."""

import pytest

from pfhat.errors import ValidationError
from pfhat.settings import Settings, get_settings, parallel_map, set_settings


class TestSettings:
    """Test environment-driven settings."""

    def test_defaults(self) -> None:
        """Test values when nothing is set."""
        settings = Settings.from_env({})
        assert settings.workers == 1
        assert settings.table_max_n == 12
        assert settings.slim_max_n == 5
        assert settings.slim_big_n == 6

    def test_from_env(self) -> None:
        """Test reading PFHAT_* variables."""
        settings = Settings.from_env({"PFHAT_WORKERS": "4", "PFHAT_SLIM_MAX_N": "4"})
        assert settings.workers == 4
        assert settings.slim_max_n == 4

    @pytest.mark.parametrize("raw", ["x", "0", "-2"])
    def test_invalid_values(self, raw: str) -> None:
        """Test that non-positive or non-integer values are rejected."""
        with pytest.raises(ValidationError):
            Settings.from_env({"PFHAT_WORKERS": raw})

    def test_with_workers(self) -> None:
        """Test overriding the worker count."""
        settings = Settings()
        assert settings.with_workers(None) is settings
        assert settings.with_workers(3).workers == 3
        with pytest.raises(ValidationError):
            settings.with_workers(0)

    def test_process_wide(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test installing and resetting the global settings."""
        set_settings(Settings(workers=2))
        assert get_settings().workers == 2
        monkeypatch.setenv("PFHAT_WORKERS", "5")
        set_settings(None)
        assert get_settings().workers == 5


class TestParallelMap:
    """Test order-preserving maps."""

    def test_serial(self) -> None:
        """Test the in-process path."""
        assert parallel_map(abs, [-1, 2, -3], workers=1) == [1, 2, 3]

    def test_pool(self) -> None:
        """Test the process-pool path keeps input order."""
        assert parallel_map(abs, [-4, 3, -2, 1], workers=2) == [4, 3, 2, 1]

    def test_uses_settings(self) -> None:
        """Test that workers=None falls back to the configured count."""
        set_settings(Settings(workers=1))
        assert parallel_map(str, [1, 2]) == ["1", "2"]
