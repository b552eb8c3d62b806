"""Utilidades: logging, validadores y manejo de archivos."""
