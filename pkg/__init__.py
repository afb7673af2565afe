# This file makes the repository root a Python package
