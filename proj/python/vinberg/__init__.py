"""Vinberg's algorithm for the form -phi x0^2 + x1^2 + ... + xn^2.

Each function mirrors a subcommand of the ``vinberg`` tool.  JSON results
come back parsed; other formats come back as text.  A nonzero exit that is
not a verdict (budget exhausted, certified) raises VinbergError.
"""

import json

from . import _core

__version__ = _core.__version__

EXIT_OK = _core.EXIT_OK
EXIT_ERROR = _core.EXIT_ERROR
EXIT_BUDGET = _core.EXIT_BUDGET
EXIT_CERTIFIED = _core.EXIT_CERTIFIED


class VinbergError(RuntimeError):
    """A command failed; ``error`` holds the parsed error object."""

    def __init__(self, error):
        self.error = error
        super().__init__(f"{error.get('type')}: {error.get('message')}")


def _finish(result, fmt):
    code, output, error = result
    if code == EXIT_ERROR and error:
        raise VinbergError(json.loads(error)["error"])
    if fmt == "json":
        return code, json.loads(output)
    return code, output


def run(dim, phi=3, max_roots=0, max_k0=10_000, format="json"):
    """Return (exit_code, document).  Exit 0 is finite volume, 2 a spent budget."""
    return _finish(_core.run(phi=phi, dim=dim, max_roots=max_roots, max_k0=max_k0, format=format), format)


def check(document, dim=None, format="json"):
    """Analyze roots or a Gram block given as a dict or JSON text."""
    text = document if isinstance(document, str) else json.dumps(document)
    return _finish(_core.check(text, dim, format), format)


def certify_nonreflective(dim, phi=3, format="json"):
    """Return (exit_code, document); exit 3 means certified."""
    return _finish(_core.certify_nonreflective(phi=phi, dim=dim, format=format), format)


def oracle(dim, phi=3, max_k0=5, max_roots=0, format="json"):
    """Compare the engine with brute force; exit 0 iff identical."""
    code, output, error = _core.oracle(phi=phi, dim=dim, max_k0=max_k0, max_roots=max_roots, format=format)
    if error:
        raise VinbergError(json.loads(error)["error"])
    return code, json.loads(output) if format == "json" else output


__all__ = [
    "EXIT_BUDGET",
    "EXIT_CERTIFIED",
    "EXIT_ERROR",
    "EXIT_OK",
    "VinbergError",
    "certify_nonreflective",
    "check",
    "oracle",
    "run",
]
