"""
Tests for validators module.
"""

import pytest
import numpy as np
from pathlib import Path

from utils import (
    FileNotFoundError,
    MalformedResponse,
    ValidationError,
    validate_file_path,
    validate_fraction,
    validate_positive_integer,
    validate_probability_vector,
)


class TestValidateFilePath:
    """Tests for validate_file_path function."""

    def test_valid_file_path(self, tmp_path: Path) -> None:
        """Test validation passes for valid file."""
        target = tmp_path / 'data.jsonl'
        target.write_text('{}\n', encoding='utf-8')
        assert validate_file_path(str(target)) == target

    def test_nonexistent_file(self) -> None:
        """Test validation fails for nonexistent file."""
        with pytest.raises(FileNotFoundError):
            validate_file_path('/nonexistent/path/file.txt')

    def test_directory_path(self, tmp_path: Path) -> None:
        """Test validation fails for directory."""
        with pytest.raises(ValidationError):
            validate_file_path(tmp_path)


class TestValidatePositiveInteger:
    """Tests for validate_positive_integer."""

    @pytest.mark.parametrize("value", [1, 7, np.int64(3)])
    def test_accepts(self, value: int) -> None:
        """Plain and numpy integers pass."""
        assert validate_positive_integer(value, 'n') == int(value)

    @pytest.mark.parametrize("value", [0, -2, 1.5, True, '3'])
    def test_rejects(self, value: object) -> None:
        """Zero, negatives, floats, bools and strings fail."""
        with pytest.raises(ValidationError):
            validate_positive_integer(value, 'n')

    def test_custom_minimum(self) -> None:
        """The minimum is configurable."""
        with pytest.raises(ValidationError):
            validate_positive_integer(1, 'n', minimum=2)


class TestValidateFraction:
    """Tests for validate_fraction."""

    @pytest.mark.parametrize("value", [1.0, 0.1, '0.5'])
    def test_accepts(self, value: object) -> None:
        """Values in (0, 1] pass."""
        assert 0.0 < validate_fraction(value, 'tau') <= 1.0

    @pytest.mark.parametrize("value", [0.0, -0.1, 1.01, 'abc', None])
    def test_rejects(self, value: object) -> None:
        """Values outside (0, 1] fail."""
        with pytest.raises(ValidationError):
            validate_fraction(value, 'tau')


class TestValidateProbabilityVector:
    """Tests for validate_probability_vector."""

    def test_valid(self) -> None:
        """A proper vector is returned as a tuple of floats."""
        assert validate_probability_vector([0.25, 0.75], 2) == (0.25, 0.75)

    def test_tolerance(self) -> None:
        """Sums within 1e-6 of one are accepted."""
        validate_probability_vector([0.5, 0.5000005], 2)

    @pytest.mark.parametrize("probs,num_labels", [
        ([0.5, 0.5], 3),
        ([0.6, 0.6], 2),
        ([1.2, -0.2], 2),
        ([float('nan'), 1.0], 2),
        ([[0.5, 0.5]], 2),
        (['a', 'b'], 2),
    ])
    def test_malformed(self, probs: list, num_labels: int) -> None:
        """Wrong length, bad sums, out-of-range and non-numeric values fail."""
        with pytest.raises(MalformedResponse):
            validate_probability_vector(probs, num_labels)
