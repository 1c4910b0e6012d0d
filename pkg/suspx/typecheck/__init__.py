# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Simple type checking of de Bruijn and suspension terms."""

from suspx.typecheck.check_db import apply_type, typecheck_db
from suspx.typecheck.check_susp import infer_env, typecheck_susp
from suspx.typecheck.contexts import Context, Signature
