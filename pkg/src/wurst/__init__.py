"""Exact computation kernel for finite truncated (bi)simplicial sets."""

__version__ = "0.1.0"
