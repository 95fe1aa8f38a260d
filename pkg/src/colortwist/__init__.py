"""Color-code anyons, symmetries, boundaries and twist-defect codes."""

__version__ = "0.1.0"
