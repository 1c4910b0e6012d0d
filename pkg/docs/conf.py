# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""SuspX documentation configuration."""

import configparser
import os

# Project information
project = "SuspX"
copyright = "2022, the SuspX authors"
author = "SuspX authors"
_setup_cfg = configparser.ConfigParser()
_setup_cfg.read(os.path.join(os.path.dirname(__file__), os.pardir, "setup.cfg"))
release = _setup_cfg.get("metadata", "version", fallback="")
version = release

# General configuration
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode"
]
exclude_patterns = ["_build"]

# Extensions configuration
autodoc_default_options = {
    "exclude-members": "__dict__,__init__,__module__,__weakref__",
    "imported-members": True,
    "members": True,
    "show-inheritance": True,
    "special-members": True,
    "undoc-members": True
}
autodoc_typehints = "description"
autosummary_generate = True
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_use_ivar = True

# Options for HTML output
html_theme = "nature"
html_title = "SuspX: the suspension calculus and its relatives"
