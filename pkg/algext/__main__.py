"""
algext.__main__
~~~~~~~~~~~~~~~
``python -m algext``.
"""
import sys

from .cli import main

sys.exit(main())
