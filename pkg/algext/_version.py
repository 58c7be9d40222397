"""
algext.version
~~~~~~~~~~~~~~
This module contains package metadata.
"""

__version__: str = "0.3.1"
