#!/usr/bin/env python
"""Command-line utility for gyrochromatic computations."""
import sys


def main():
    """Run a gyrochromatic command."""
    try:
        from gyrochromatic.cli import main as run
    except ImportError as exc:
        raise ImportError(
            "Couldn't import gyrochromatic. Are its requirements installed "
            "(pip install -r requirements.txt and pip install ./logger_pkg)?"
        ) from exc
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
