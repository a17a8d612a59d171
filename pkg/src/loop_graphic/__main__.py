"""Entry point for running loop-graphic as a module."""

import sys

from loop_graphic.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
