"""Subcommand modules."""
