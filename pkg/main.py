#!/usr/bin/env python3
"""
Lattice Miner - frequent closed itemsets, minimal generators and generic
association rules from FIMI transaction files.

Usage:
    python main.py mine data.dat --minsupp 2 --minconf 0.5
    python main.py gui

Or as a module:
    python -m lattice_miner
"""
import sys
from pathlib import Path

# Add the project root to path for imports
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from cli import main as cli_main


def main():
    """Main entry point."""
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
