"""Repository package for file-backed artifacts."""
