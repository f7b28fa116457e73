"""Exact q,t-arithmetic for symmetric function identities and parking combinatorics."""

__version__ = "0.1.0"
