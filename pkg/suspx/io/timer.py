# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Wall clock timing of reductions."""

from __future__ import annotations

import logging
import time
import types
import typing

from suspx.errors import BudgetExhausted, InternalFuelExhausted

logger = logging.getLogger(__name__)


class Timer(object):
    """
    A context manager timing a reduction, logging and optionally storing the elapsed time.

    Parameters
    ----------
    store
        Callable implementing an action to store the elapsed time, if any.
    label
        Description of the timed reduction, used in log records.

    Attributes
    ----------
    _store
        Callable provided as input.
    _label
        Description provided as input.
    _start
        Time stamp, in fractional seconds, when the context was entered.
    """

    def __init__(
        self, store: typing.Optional[typing.Callable[[float], None]] = None, label: str = "reduction"
    ) -> None:
        self._store = store
        self._label = label
        self._start: typing.Optional[float] = None

    def __enter__(self) -> Timer:
        """Enter the context and start the timer."""
        self._start = time.perf_counter()
        return self

    def __exit__(
        self, exception_type: typing.Optional[typing.Type[BaseException]],
        exception_value: typing.Optional[BaseException], traceback: typing.Optional[types.TracebackType]
    ) -> None:
        """Stop the timer, report the elapsed time and exit the context; exceptions propagate."""
        assert self._start is not None
        elapsed = time.perf_counter() - self._start
        self._start = None
        if isinstance(exception_value, BudgetExhausted):
            logger.info(
                "%s stopped by its budget after %d steps and %.3f s", self._label, exception_value.steps, elapsed)
        elif isinstance(exception_value, InternalFuelExhausted):
            logger.warning("%s ran out of fuel after %.3f s", self._label, elapsed)
        elif exception_value is None:
            logger.info("%s completed in %.3f s", self._label, elapsed)
        if self._store is not None:
            self._store(elapsed)


def store_elapsed_time(storage: typing.MutableSequence[float], index: int) -> typing.Callable[[float], None]:
    """Return a store for suspx.io.Timer writing the elapsed time at the given index of storage."""
    def _store_elapsed_time(elapsed: float) -> None:
        storage[index] = elapsed
    return _store_elapsed_time
