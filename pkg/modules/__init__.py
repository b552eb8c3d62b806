"""Módulos de cálculo de toricarc."""
