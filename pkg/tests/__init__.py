"""Pruebas de toricarc."""
