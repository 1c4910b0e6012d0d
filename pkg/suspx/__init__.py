# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""SuspX main module."""
