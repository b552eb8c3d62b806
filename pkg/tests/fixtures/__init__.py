"""Archivos auxiliares de las pruebas."""
