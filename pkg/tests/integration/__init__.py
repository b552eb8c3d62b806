"""Pruebas de integración de la CLI y de aceptación."""
