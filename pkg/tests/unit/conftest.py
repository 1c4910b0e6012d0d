# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""
pytest configuration file for unit tests.

This file assigns pytest hooks and registers the hypothesis profiles used across several files.
"""

import os
import pathlib

import hypothesis
import pytest

hypothesis.settings.register_profile("suspx", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("SUSPX_HYPOTHESIS_PROFILE", "suspx"))


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add an option to skip the acceptance tests, which reduce larger expressions."""
    parser.addoption("--skip-acceptance", action="store_true", help="Skip the slower acceptance tests")


def pytest_ignore_collect(collection_path: pathlib.Path, config: pytest.Config) -> bool:
    """Honor the --skip-acceptance option to skip the acceptance tests."""
    skip_acceptance = config.option.skip_acceptance
    if skip_acceptance:
        return "tests/unit/acceptance/" in str(collection_path)
    else:
        return False
