"""Command-line interface."""

# Stable exit-status contract.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3
EXIT_DISAGREEMENT = 4
