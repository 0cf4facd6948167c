"""Small shared utilities."""

from __future__ import annotations

from .errors import Cancelled

# Default seed for every randomized search and cross-check in the package.
DEFAULT_SEED = 271828


class CancelToken:
    """Cooperative cancellation flag polled by long-running solvers.

    A caller keeps a reference, passes the token into a solver, and may set
    it from another thread; the solver raises :class:`Cancelled` at its next
    checkpoint.
    """

    __slots__ = ("_cancelled",)

    def __init__(self) -> None:
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def check(self) -> None:
        if self._cancelled:
            raise Cancelled("operation cancelled")


def check_cancel(cancel: CancelToken | None) -> None:
    if cancel is not None:
        cancel.check()
