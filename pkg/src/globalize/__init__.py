"""Globalization of partial actions: finite sets, finite spaces and partial comodule algebras."""

__version__ = "0.1.0"
