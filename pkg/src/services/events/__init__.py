"""Event stream services."""
