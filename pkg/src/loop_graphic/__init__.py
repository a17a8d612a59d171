"""loop-graphic: degree sequences of graphs-with-loops and their double covers."""

__version__ = "1.0.0"
