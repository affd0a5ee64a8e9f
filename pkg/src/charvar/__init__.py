"""Exact generating-function toolkit for character varieties and comet-shaped quivers."""

__version__ = "0.1.0"
