"""Command-line runner: argument parsing, bootstrap and command execution."""
