"""Alternating descents, 3-descents and their generating functions, computed exactly."""
from __future__ import annotations

__version__ = "0.1.0"
