"""
Internationalization (i18n) module for QueryLean.

User-facing messages (CLI output, error texts) are looked up in JSON catalogues
under ``locales/`` according to the LANGUAGE environment variable.

Supported languages:

    - 'en' or 'english': English (default)
    - 'es' or 'español': Spanish

Usage::

    from i18n import t

    raise EmptyDataset(t('error.empty_dataset', path=path))
"""

# Standard library
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from config import (
    _DEFAULT_LANG,
    LANGUAGE_ALIASES,
    SUPPORTED_LANGUAGE_CODES,
)

DEFAULT_LANGUAGE: str = _DEFAULT_LANG

_LOCALES_DIR = Path(__file__).parent / 'locales'

# Current loaded language
_current_language: str = DEFAULT_LANGUAGE
_translations: Dict[str, Any] = {}
# Cache loaded files per language
_translation_cache: Dict[str, Dict[str, Any]] = {}
# Cache resolved keys for current language
_key_cache: Dict[str, str] = {}


def _normalize_language(language: str) -> str:
    """
    Normalize language code to standard format.

    Args:
        language: Language name or code

    Returns:
        Normalized language code (one of SUPPORTED_LANGUAGE_CODES).
    """
    lang = language.strip().lower()
    if lang in SUPPORTED_LANGUAGE_CODES:
        return lang
    return LANGUAGE_ALIASES.get(lang, DEFAULT_LANGUAGE)


def _load_translations(language: str) -> Dict[str, Any]:
    """
    Load translation file for the specified language, reading each file at most once.

    Args:
        language: Language code ('en' or 'es')

    Returns:
        Dictionary with translations

    Raises:
        FileNotFoundError: If translation file doesn't exist
    """
    if language in _translation_cache:
        return _translation_cache[language]

    translation_file = _LOCALES_DIR / f'{language}.json'
    if not translation_file.exists():
        raise FileNotFoundError(f"Translation file not found: {translation_file}")

    with open(translation_file, 'r', encoding='utf-8') as f:
        data = json.load(f)

    _translation_cache[language] = data
    return data


def get_current_language() -> str:
    """Return the active language code."""
    return _current_language


def initialize_i18n(language: Optional[str] = None) -> None:
    """
    Initialize the internationalization system.

    Args:
        language: Optional language code. If None, reads the LANGUAGE env var.
    """
    global _current_language, _translations

    if language is None:
        language = os.getenv('LANGUAGE', DEFAULT_LANGUAGE)
    language = _normalize_language(language)

    _current_language = language
    _key_cache.clear()

    try:
        _translations = _load_translations(language)
    except FileNotFoundError:
        _current_language = DEFAULT_LANGUAGE
        _translations = _load_translations(DEFAULT_LANGUAGE)


def t(key: str, **kwargs: Any) -> str:
    """
    Translate a key to the current language.

    Args:
        key: Translation key in dot notation (e.g. ``'error.empty_text'``).
        **kwargs: Optional format parameters for string interpolation.

    Returns:
        Translated string, or the key itself if translation not found.

    Examples:
        >>> t('error.parse_error', line=3, error='missing label')
        'Line 3: missing label'
    """
    if not _translations:
        initialize_i18n()

    template = _key_cache.get(key)
    if template is None:
        value: Any = _translations
        for part in key.split('.'):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return key
        if isinstance(value, dict):
            return key
        template = str(value)
        _key_cache[key] = template

    if kwargs:
        try:
            return template.format(**kwargs)
        except (KeyError, ValueError, IndexError):
            return template
    return template
