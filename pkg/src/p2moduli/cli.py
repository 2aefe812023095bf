"""
CLI entry point para p2moduli.
"""
import sys

from p2moduli.main import main

if __name__ == "__main__":
    sys.exit(main())
