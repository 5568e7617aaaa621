"""JSON-over-HTTP helper shared by the remote oracle clients."""

# Standard library
from typing import Any, Optional

# Third-party packages
import requests

# Local imports
from config import get_env_from_schema
from i18n import t
from utils import MalformedResponse, OracleError, get_logger

logger = get_logger(__name__)

# One retry on transport errors, nothing more
_ATTEMPTS = 2


def normalize_endpoint(url: str, route: str) -> str:
    """
    Return ``url`` with ``route`` appended unless it already ends with it.

    A bare ``host:port`` gets an ``http://`` scheme.

    Examples:
        >>> normalize_endpoint('localhost:8000', '/classify')
        'http://localhost:8000/classify'
    """
    url = url.strip()
    if not url.startswith(('http://', 'https://')):
        url = f"http://{url}"
    url = url.rstrip('/')
    if not url.endswith(route):
        url = f"{url}{route}"
    return url


def post_json(
    endpoint: str,
    payload: dict[str, Any],
    unavailable: type[OracleError],
    timeout: Optional[float] = None,
) -> dict[str, Any]:
    """
    POST ``payload`` as JSON and return the decoded JSON object.

    Connection errors and timeouts are retried once. HTTP error statuses are
    not retried.

    Args:
        endpoint: Full URL of the service route.
        payload: JSON-serializable request body.
        unavailable: Exception type raised when the service cannot be reached.
        timeout: Seconds per attempt; defaults to HTTP_TIMEOUT.

    Returns:
        The decoded response object.

    Raises:
        unavailable: On transport failure after the retry or an HTTP error status.
        MalformedResponse: If the body is not a JSON object.
    """
    if timeout is None:
        timeout = float(get_env_from_schema('HTTP_TIMEOUT'))

    last_error: Optional[Exception] = None
    for attempt in range(1, _ATTEMPTS + 1):
        try:
            response = requests.post(endpoint, json=payload, timeout=timeout)
            response.raise_for_status()
            break
        except (requests.ConnectionError, requests.Timeout) as e:
            last_error = e
            logger.warning(f"Request to {endpoint} failed (attempt {attempt}/{_ATTEMPTS}): {e}")
        except requests.HTTPError as e:
            logger.error(f"Request to {endpoint} returned an error status: {e}")
            raise unavailable(t('error.remote_unavailable', endpoint=endpoint, error=str(e))) from e
    else:
        raise unavailable(
            t('error.remote_unavailable', endpoint=endpoint, error=str(last_error))
        ) from last_error

    try:
        body = response.json()
    except ValueError as e:
        logger.error(f"Response from {endpoint} is not JSON: {e}")
        raise MalformedResponse(t('error.malformed_response', endpoint=endpoint, detail=str(e))) from e

    if not isinstance(body, dict):
        raise MalformedResponse(
            t('error.malformed_response', endpoint=endpoint, detail='expected a JSON object')
        )
    return body
