"""Núcleo compartido de toricarc: excepciones y utilidades."""
