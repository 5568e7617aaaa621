"""File paths and output directory configuration."""

from pathlib import Path
from typing import Optional, Union

from config.constants import BINS_FILENAME, RESULTS_FILENAME, SUMMARY_FILENAME
from config.env import get_env_from_schema

# Shipped Dynamic-N tables, one TSV per dataset id
BINS_DIR: Path = Path(__file__).resolve().parent / 'bins'


def get_project_root() -> Path:
    """
    Get the project root directory (parent of ``src/``).

    Returns:
        Absolute :class:`pathlib.Path` to the project root.
    """
    # __file__ is src/config/paths.py
    return Path(__file__).resolve().parent.parent.parent


def ensure_output_directory(output_dir: Optional[Union[str, Path]] = None) -> Path:
    """
    Ensure that the output directory exists and return its absolute path.

    Relative paths are resolved against the current working directory. When
    ``output_dir`` is ``None`` the ``OUTPUT_DIR`` setting is used.

    Args:
        output_dir: Output directory, usually from the ``--out`` flag.

    Returns:
        Absolute path to the output directory.

    Raises:
        OSError: If the directory cannot be created.
    """
    if output_dir is None:
        output_dir = get_env_from_schema('OUTPUT_DIR')
    full_path = Path(output_dir).resolve()
    try:
        full_path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OSError(f"Could not create output directory: {e!s}") from e
    return full_path


def get_output_paths(output_dir: Union[str, Path]) -> dict[str, Path]:
    """
    Build the standard artifact paths inside an output directory.

    Args:
        output_dir: Directory receiving the artifacts (created if missing).

    Returns:
        Mapping with keys ``results``, ``summary`` and ``bins``.

    Examples:
        >>> get_output_paths("runs/a")["results"].name
        'results.jsonl'
    """
    base = ensure_output_directory(output_dir)
    return {
        'results': base / RESULTS_FILENAME,
        'summary': base / SUMMARY_FILENAME,
        'bins': base / BINS_FILENAME,
    }


def builtin_bins_path(dataset_id: str) -> Path:
    """Path of the shipped bin table for ``dataset_id`` (may not exist)."""
    return BINS_DIR / f"{dataset_id.strip().lower()}.tsv"
