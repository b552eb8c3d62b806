"""Módulo de configuración de toricarc."""
