#!/usr/bin/env python3
"""
grpmat - finite groups encoded as 0/1 matrices

Main entry point for the command line.
"""
import sys

from src.cli.commands import main

if __name__ == '__main__':
    sys.exit(main())
