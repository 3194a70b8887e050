"""Entry point for ``python -m bwtcat``."""

import sys

from bwtcat.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
