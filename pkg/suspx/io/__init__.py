# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""SuspX io module."""

from suspx.io.export import export_expression, export_signature, export_type
from suspx.io.import_ import import_context, import_expression, import_signature, import_type
from suspx.io.languages import Language
from suspx.io.timer import store_elapsed_time, Timer
from suspx.io.trace import export_trace, import_trace, replay_trace, to_records, TraceRecord
