#!/usr/bin/env python3
"""
Summand Lab command runner
Puts the repository root on the path and runs the CLI
"""

import os
import sys

# Add the directory holding this file to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from Summand_Lab.start_lab import main

if __name__ == "__main__":
    sys.exit(main())
