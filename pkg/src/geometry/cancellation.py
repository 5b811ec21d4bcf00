"""
Cooperative cancellation for long-running geometry work.
"""

import threading
from typing import Optional

from utils.errors import OperationCancelled


class CancellationToken:
    """Flag shared between a caller and a running conversion or LP sequence."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self) -> None:
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()

    def raise_if_cancelled(self) -> None:
        if self._event.is_set():
            raise OperationCancelled("operation cancelled")


def check(token: Optional[CancellationToken]) -> None:
    if token is not None:
        token.raise_if_cancelled()
