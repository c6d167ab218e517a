"""Command runners behind the CLI router."""
