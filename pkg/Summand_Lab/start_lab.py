#!/usr/bin/env python3
"""
Summand Lab Startup Script
Loads the .env file, checks the configuration and hands the arguments to the CLI
"""
import os
import sys

from dotenv import load_dotenv

from Summand_Lab.main_cli import main as cli_main
from Summand_Lab.utils.settings import DEFAULT_CONFIG_PATH, ENV_CONFIG_PATH


def main() -> int:
    """Start one Summand Lab command"""
    # Load environment variables from .env file
    load_dotenv()

    config_path = os.getenv(ENV_CONFIG_PATH) or DEFAULT_CONFIG_PATH
    if not os.path.exists(config_path):
        print(f"⚠️  Config file not found: {config_path} (using built-in defaults)", file=sys.stderr)

    try:
        return cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        print("\n🛑 Summand Lab command interrupted", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
