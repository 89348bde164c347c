"""Exact tools for Hilbert-Kunz multiplicities: bounds, closed forms and colength engines."""

__version__ = "0.1.0"
