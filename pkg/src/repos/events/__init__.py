"""Event stream persistence."""
