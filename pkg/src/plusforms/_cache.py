"""Monotone precision cache for expensive series builders.

A builder keyed by name is recomputed only when a caller wants more
precision than any previous call; shorter requests are served by
truncation.  Series are immutable, so sharing is safe.
"""

from __future__ import annotations

import threading

from .qseries import QSeries

_lock = threading.Lock()
_store: dict = {}


def series_at(key, precision: int, builder) -> QSeries:
    """Return builder(P) truncated to `precision`, reusing any cached build
    of the same key at precision >= the request."""
    with _lock:
        cached = _store.get(key)
    if cached is None or cached.precision < precision:
        cached = builder(precision)
        if cached.precision < precision:
            raise ValueError("builder for %r returned precision %d < %d"
                             % (key, cached.precision, precision))
        with _lock:
            prev = _store.get(key)
            if prev is None or prev.precision < cached.precision:
                _store[key] = cached
            else:
                cached = prev
    return cached.truncate(precision)


def clear() -> None:
    with _lock:
        _store.clear()
