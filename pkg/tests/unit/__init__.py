"""Pruebas unitarias por módulo."""
