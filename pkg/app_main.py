#!/usr/bin/env python3
"""
Entry point for the summand-lab command
Imports the CLI main from the Summand_Lab package
"""
# Import the CLI entry point from the Summand_Lab module
from Summand_Lab.main_cli import dispatch, main

# Export for console-script wrappers
__all__ = ['dispatch', 'main']

if __name__ == "__main__":
    import sys
    sys.exit(main())
