# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))
from algext._version import __version__

# -- Project information -----------------------------------------------------
project = 'algext'
copyright = '2026, algext developers'
author = 'algext developers'

# The full version, including alpha/beta/rc tags
release = __version__
version = __version__

# -- General configuration ---------------------------------------------------
master_doc = 'index'

extensions = [
]

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'

html_static_path = ['_static']

html_title = 'algext: algebraic randomness extractors'
html_short_title = 'algext'

html_sidebars = {
    "**": [
        'about.html',
        "globaltoc.html",
        "relations.html",
        "slim_searchbox.html",
    ],
}

html_theme_options = {
    'show_powered_by': 'false'
}
