# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Run the suspx executable with python -m suspx."""

import sys

from suspx.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
