#!/usr/bin/env python3
"""
Schroeder Hopf Toolkit Command Line
===================================

Usage:
    python schroeder_cli.py trees count --n 4 --pretty
    python schroeder_cli.py hopf antipode --word "1 2 3"
    python schroeder_cli.py prob cumulants --kind free --moments moments.json
"""

import sys
from pathlib import Path

# Ensure we can import from the current directory
if __name__ == '__main__':
    sys.path.insert(0, str(Path(__file__).parent))

from schroeder.cli.commands import main


if __name__ == '__main__':
    sys.exit(main())
